use alloc::vec;
use alloc::vec::Vec;

/// Binary indexed tree over positions `1..=n` holding counts.
#[derive(Debug)]
pub(crate) struct Fenwick {
    tree: Vec<u32>,
}

impl Fenwick {
    pub(crate) fn new(n: usize) -> Self {
        Self { tree: vec![0; n + 1] }
    }

    /// A tree with every position holding 1.
    pub(crate) fn full(n: usize) -> Self {
        let mut tree = vec![1u32; n + 1];
        tree[0] = 0;
        for i in 1..=n {
            let parent = i + (i & i.wrapping_neg());
            if parent <= n {
                tree[parent] += tree[i];
            }
        }
        Self { tree }
    }

    pub(crate) fn add(&mut self, mut pos: usize, delta: i32) {
        while pos < self.tree.len() {
            self.tree[pos] = self.tree[pos].wrapping_add_signed(delta);
            pos += pos & pos.wrapping_neg();
        }
    }

    /// Sum over positions `1..=pos`.
    pub(crate) fn prefix(&self, mut pos: usize) -> u32 {
        let mut sum = 0;
        while pos > 0 {
            sum += self.tree[pos];
            pos &= pos - 1;
        }
        sum
    }

    /// Smallest position whose prefix sum reaches `target` (>= 1).
    pub(crate) fn select(&self, mut target: u32) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = if n == 0 { 0 } else { 1 << (usize::BITS - 1 - n.leading_zeros()) };
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] < target {
                pos = next;
                target -= self.tree[next];
            }
            step >>= 1;
        }
        pos + 1
    }
}
