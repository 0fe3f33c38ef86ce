//! Set partitions of `0..n` and their enumeration in restricted-growth order.

use crate::error::{Error, Result};

/// A partition of `0..ground_size`. Blocks are sorted internally and ordered
/// by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn from_blocks(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; ground];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            for &x in b {
                if x >= ground || seen[x] {
                    return Err(Error::Precondition(format!("element {x} out of range or repeated")));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Precondition("blocks do not cover the ground set".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { ground, blocks })
    }

    /// All singletons.
    pub fn discrete(ground: usize) -> Partition {
        Partition {
            ground,
            blocks: (0..ground).map(|v| vec![v]).collect(),
        }
    }

    /// From a restricted-growth string: element `i` goes to block `rgs[i]`.
    pub fn from_rgs(rgs: &[usize]) -> Partition {
        let nblocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        Partition {
            ground: rgs.len(),
            blocks,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `block_index()[v]` is the index of the block containing `v`.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.ground];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                idx[v] = i;
            }
        }
        idx
    }
}

/// Calls `f` with the restricted-growth string of every partition of
/// `0..n`, in lexicographic order.
pub fn for_each_rgs(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(i: usize, n: usize, max: usize, rgs: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == n {
            f(rgs);
            return;
        }
        let limit = if i == 0 { 0 } else { max + 1 };
        for b in 0..=limit {
            rgs.push(b);
            rec(i + 1, n, max.max(b), rgs, f);
            rgs.pop();
        }
    }
    rec(0, n, 0, &mut Vec::with_capacity(n), f);
}

/// All partitions of `0..n`, capped at `max_ground` elements.
pub fn all_partitions(n: usize, max_ground: usize) -> Result<Vec<Partition>> {
    if n > max_ground {
        return Err(Error::cap("partition enumeration", max_ground, n));
    }
    let mut out = Vec::new();
    for_each_rgs(n, &mut |rgs| out.push(Partition::from_rgs(rgs)));
    Ok(out)
}

/// Partitions of an arbitrary finite set of items, as lists of blocks of
/// items, in restricted-growth order over the given item order.
pub fn partitions_of<T: Clone>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    let mut out = Vec::new();
    for_each_rgs(items.len(), &mut |rgs| {
        let p = Partition::from_rgs(rgs);
        out.push(
            p.blocks()
                .iter()
                .map(|b| b.iter().map(|&i| items[i].clone()).collect())
                .collect(),
        );
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(all_partitions(n, 10).unwrap().len(), b);
        }
    }

    #[test]
    fn canonical_form() {
        let a = Partition::from_blocks(4, vec![vec![3, 1], vec![2], vec![0]]).unwrap();
        assert_eq!(a.blocks(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(a, Partition::from_rgs(&[0, 1, 2, 1]));
        assert!(Partition::from_blocks(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::from_blocks(2, vec![vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(all_partitions(12, 10).unwrap_err().is_cap());
    }
}
