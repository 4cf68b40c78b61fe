//! Deterministic graph generators for test suites.

/// SplitMix64: tiny seedable generator, good enough for test fixtures.
#[derive(Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Erdős–Rényi G(n, p).
pub fn gnp(n: u64, p: f64, seed: u64) -> Vec<(u64, u64)> {
    let mut rng = SplitMix64::new(seed ^ 0xc11a_5eed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Sparse G(n, m): m pair samples without replacement bookkeeping beyond dedup.
pub fn gnm(n: u64, m: u64, seed: u64) -> Vec<(u64, u64)> {
    let mut rng = SplitMix64::new(seed ^ 0x6e6d_5eed);
    let mut seen = std::collections::HashSet::with_capacity(m as usize * 2);
    let mut edges = Vec::with_capacity(m as usize);
    let mut attempts = 0u64;
    while (edges.len() as u64) < m && attempts < m * 20 {
        attempts += 1;
        let u = rng.next_below(n);
        let v = rng.next_below(n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    edges
}

pub fn complete(n: u64) -> Vec<(u64, u64)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    edges
}

pub fn cycle(n: u64) -> Vec<(u64, u64)> {
    (0..n).map(|u| (u, (u + 1) % n)).collect()
}

pub fn path(n: u64) -> Vec<(u64, u64)> {
    (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect()
}

/// Star with `leaves` leaves; center is vertex 0.
pub fn star(leaves: u64) -> Vec<(u64, u64)> {
    (1..=leaves).map(|v| (0, v)).collect()
}

pub fn complete_bipartite(a: u64, b: u64) -> Vec<(u64, u64)> {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    edges
}

/// K_k with `pendants` degree-one vertices hung off member 0.
pub fn clique_with_pendants(k: u64, pendants: u64) -> Vec<(u64, u64)> {
    let mut edges = complete(k);
    for i in 0..pendants {
        edges.push((0, k + i));
    }
    edges
}

pub fn petersen() -> Vec<(u64, u64)> {
    let mut edges: Vec<(u64, u64)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges
}

/// K_{3,3} plus a disjoint triangle. The bipartite block has higher core
/// numbers (3) than the triangle (2), which steers greedy strategies away
/// from the actual maximum clique — a useful adversarial fixture.
pub fn k33_plus_triangle() -> Vec<(u64, u64)> {
    let mut edges = complete_bipartite(3, 3);
    edges.extend_from_slice(&[(6, 7), (7, 8), (6, 8)]);
    edges
}

/// Random temporal network: `m` timestamped arcs over `n` vertices.
/// `tie_bias` in [0,1] raises timestamp collisions by drawing times from a
/// small integer grid.
pub fn temporal_random(n: u32, m: usize, seed: u64, tie_bias: f64) -> Vec<(u32, u32, f64)> {
    let mut rng = SplitMix64::new(seed ^ 0x7e3a_11ed);
    let grid = if tie_bias > 0.0 {
        ((m as f64) * (1.0 - tie_bias)).max(2.0) as u64
    } else {
        u64::MAX
    };
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.next_below(n as u64) as u32;
        let v = rng.next_below(n as u64) as u32;
        if u == v {
            continue;
        }
        let t = if grid == u64::MAX {
            rng.next_f64() * 1e6
        } else {
            rng.next_below(grid) as f64
        };
        edges.push((u, v, t));
    }
    edges
}
