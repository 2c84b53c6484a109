//! Exhaustive enumeration of unlabeled cographs and seeded random cographs.
//!
//! Connected cographs on `n ≥ 2` vertices are exactly the complements of the
//! disconnected ones, and a disconnected cograph is a multiset of at least
//! two connected ones, so one table per kind suffices.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cograph::Cotree;
use crate::graph::Graph;

/// `connected[m]` and `disconnected[m]` for `m <= n`, one cotree per
/// isomorphism class, leaves numbered `0..m` left to right.
pub struct Catalog {
    connected: Vec<Vec<Cotree>>,
    disconnected: Vec<Vec<Cotree>>,
}

impl Catalog {
    pub fn up_to(n: usize) -> Catalog {
        let mut cat = Catalog { connected: vec![Vec::new(), vec![Cotree::Leaf(0)]], disconnected: vec![Vec::new(), Vec::new()] };
        for m in 2..=n {
            let mut disc = Vec::new();
            let mut parts = Vec::new();
            cat.multisets(m, m - 1, (1, 0), &mut parts, &mut disc);
            let conn = disc.iter().map(Cotree::complement).collect();
            cat.disconnected.push(disc);
            cat.connected.push(conn);
        }
        cat.connected.truncate(n + 1);
        cat.disconnected.truncate(n + 1);
        cat
    }

    /// Multisets of connected pieces, listed by non-decreasing
    /// `(size, index)`, summing to `left`, each piece at most `cap`.
    fn multisets(&self, left: usize, cap: usize, min: (usize, usize), parts: &mut Vec<(usize, usize)>, out: &mut Vec<Cotree>) {
        if left == 0 {
            if parts.len() >= 2 {
                out.push(self.assemble(parts));
            }
            return;
        }
        for size in min.0..=left.min(cap) {
            let start = if size == min.0 { min.1 } else { 0 };
            for idx in start..self.connected[size].len() {
                parts.push((size, idx));
                self.multisets(left - size, cap, (size, idx), parts, out);
                parts.pop();
            }
        }
    }

    fn assemble(&self, parts: &[(usize, usize)]) -> Cotree {
        let mut offset = 0;
        let children = parts
            .iter()
            .map(|&(size, idx)| {
                let shift = offset;
                offset += size;
                self.connected[size][idx].relabel(&|v| v + shift)
            })
            .collect();
        Cotree::Union(children)
    }

    pub fn connected(&self, n: usize) -> &[Cotree] {
        &self.connected[n]
    }

    pub fn disconnected(&self, n: usize) -> &[Cotree] {
        &self.disconnected[n]
    }
}

/// Every connected cograph on `n` vertices, one per isomorphism class.
pub fn connected_cographs(n: usize) -> Vec<Graph> {
    Catalog::up_to(n).connected(n).iter().map(Cotree::realize).collect()
}

/// Every cograph on `n` vertices, one per isomorphism class.
pub fn all_cographs(n: usize) -> Vec<Graph> {
    let cat = Catalog::up_to(n);
    cat.connected(n).iter().chain(cat.disconnected(n)).map(Cotree::realize).collect()
}

/// Random cotree on `n` leaves; connected when `connected` is set. Leaf
/// ids are shuffled so that structure does not follow the numbering.
pub fn random_cotree<R: Rng>(n: usize, connected: bool, rng: &mut R) -> Cotree {
    assert!(n >= 1, "random cotree needs a leaf");
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut next = labels.into_iter();
    build_random(n, connected, rng, &mut next)
}

fn build_random<R: Rng>(n: usize, join: bool, rng: &mut R, labels: &mut impl Iterator<Item = usize>) -> Cotree {
    if n == 1 {
        return Cotree::Leaf(labels.next().expect("enough labels"));
    }
    let k = rng.gen_range(2..=n.min(4));
    let mut cuts: Vec<usize> = sample(rng, n - 1, k - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut prev = 0;
    let children = cuts
        .into_iter()
        .map(|c| {
            let size = c - prev;
            prev = c;
            build_random(size, !join, rng, labels)
        })
        .collect();
    if join {
        Cotree::Join(children)
    } else {
        Cotree::Union(children)
    }
}

/// `count` connected random cographs with sizes drawn from `sizes`,
/// reproducible from `seed`.
pub fn random_cographs(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            random_cotree(n, true, &mut rng).realize()
        })
        .collect()
}
