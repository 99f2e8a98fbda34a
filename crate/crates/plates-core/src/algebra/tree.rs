use crate::combinatorics::LabelSet;
use crate::error::{Error, Result};
use crate::text::parse_edges;

/// A tree on the vertex set `{1, …, n}` with oriented edges. Edge `(i, j)`
/// stands for the root generator `e_i - e_j` and, in expansions, for the
/// requirement that `i`'s block precede `j`'s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedTree {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl DirectedTree {
    pub fn new(n: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if n == 0 || n > LabelSet::MAX_LABEL {
            return Err(Error::domain("vertex count must be in 1..=32"));
        }
        if edges.len() != (n as usize) - 1 {
            return Err(Error::domain(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut parent: Vec<usize> = (0..n as usize).collect();
        fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &edges {
            if a == 0 || a > n || b == 0 || b > n {
                return Err(Error::domain(format!(
                    "edge ({a}, {b}) leaves the vertex set {{1, …, {n}}}"
                )));
            }
            if a == b {
                return Err(Error::domain(format!("self-loop at vertex {a}")));
            }
            let (ra, rb) = (
                find(&mut parent, (a - 1) as usize),
                find(&mut parent, (b - 1) as usize),
            );
            if ra == rb {
                return Err(Error::domain("edges contain a cycle"));
            }
            parent[ra] = rb;
        }
        Ok(DirectedTree { n, edges })
    }

    /// Parses `i>j,k>l,…`; the vertex set is `{1, …, max label}`.
    pub fn from_text(text: &str) -> Result<Self> {
        let edges = parse_edges(text)?;
        let n = edges
            .iter()
            .map(|&(a, b)| a.max(b))
            .max()
            .ok_or_else(|| Error::domain("empty edge list"))?;
        DirectedTree::new(n, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// The dual basis to the root generators: for edge `a = (i, j)`, the set
    /// of vertices on `i`'s side once the edge is removed. Summing coordinates
    /// over that set extracts the coefficient of `e_i - e_j`.
    pub fn dual_basis(&self) -> Vec<LabelSet> {
        self.edges
            .iter()
            .enumerate()
            .map(|(skip, &(tail, _))| {
                let mut component = LabelSet::singleton(tail);
                loop {
                    let mut grew = false;
                    for (a, &(i, j)) in self.edges.iter().enumerate() {
                        if a == skip {
                            continue;
                        }
                        if component.contains(i) != component.contains(j) {
                            component.insert(i);
                            component.insert(j);
                            grew = true;
                        }
                    }
                    if !grew {
                        break;
                    }
                }
                component
            })
            .collect()
    }
}

impl std::fmt::Display for DirectedTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}>{b}")?;
        }
        Ok(())
    }
}

/// All labeled (undirected) trees on `{1, …, n}` as `(min, max)` edge lists,
/// decoded from Prüfer sequences; there are `n^(n-2)` of them.
pub fn undirected_labeled_trees(n: u32) -> Result<Vec<Vec<(u32, u32)>>> {
    if n == 0 || n > 8 {
        return Err(Error::domain("labeled-tree enumeration supports 1..=8 vertices"));
    }
    if n == 1 {
        return Ok(vec![Vec::new()]);
    }
    if n == 2 {
        return Ok(vec![vec![(1, 2)]]);
    }
    let seq_len = (n - 2) as usize;
    let mut sequences = vec![Vec::new()];
    for _ in 0..seq_len {
        let mut next = Vec::with_capacity(sequences.len() * n as usize);
        for s in &sequences {
            for v in 1..=n {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        sequences = next;
    }
    Ok(sequences.into_iter().map(|seq| prufer_decode(n, &seq)).collect())
}

fn prufer_decode(n: u32, seq: &[u32]) -> Vec<(u32, u32)> {
    let mut degree = vec![1u32; n as usize + 1];
    for &v in seq {
        degree[v as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n as usize - 1);
    let mut used = vec![false; n as usize + 1];
    for &v in seq {
        let leaf = (1..=n)
            .find(|&u| degree[u as usize] == 1 && !used[u as usize])
            .expect("a leaf always exists");
        edges.push((leaf.min(v), leaf.max(v)));
        used[leaf as usize] = true;
        degree[leaf as usize] -= 1;
        degree[v as usize] -= 1;
    }
    let mut last: Vec<u32> = (1..=n)
        .filter(|&u| !used[u as usize] && degree[u as usize] == 1)
        .collect();
    debug_assert_eq!(last.len(), 2);
    let (a, b) = (last.remove(0), last.remove(0));
    edges.push((a.min(b), a.max(b)));
    edges
}
