//! Disjoint-set union for orbit counting.

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            components: n,
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
            self.components -= 1;
        }
    }

    /// Merges every element with its image under `perm`.
    pub fn union_permutation(&mut self, perm: &[u32]) {
        for (i, &j) in perm.iter().enumerate() {
            self.union(i as u32, j);
        }
    }

    pub fn count(&self) -> usize {
        self.components
    }

    /// Orbit label per element: the least element of its class.
    pub fn labels(&mut self) -> Vec<u32> {
        (0..self.parent.len() as u32)
            .map(|i| self.find(i))
            .collect()
    }
}
