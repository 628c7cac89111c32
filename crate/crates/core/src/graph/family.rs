use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{cone, Graph};
use crate::error::{Error, Result};

/// Full restarts allowed before the configuration model gives up.
pub const REGULAR_MAX_ATTEMPTS: usize = 10_000;

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Hypercube,
    MatchingUnion,
    Wheel,
    CompleteBinaryTree,
    RandomRegular,
    RandomTree,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::MatchingUnion,
        Family::Wheel,
        Family::CompleteBinaryTree,
        Family::RandomRegular,
        Family::RandomTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::MatchingUnion => "matching_union",
            Family::Wheel => "wheel",
            Family::CompleteBinaryTree => "complete_binary_tree",
            Family::RandomRegular => "random_regular",
            Family::RandomTree => "random_tree",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(self, Family::RandomRegular | Family::RandomTree)
    }

    /// Smallest valid primary size parameter.
    pub fn min_size(self) -> usize {
        match self {
            Family::Cycle | Family::Wheel => 3,
            Family::Star => 2,
            Family::Hypercube | Family::CompleteBinaryTree => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{s}`")))
    }
}

/// A family plus its size parameters.
///
/// `n` is the primary size (vertex count for path, cycle, star, complete,
/// random families; dimension for hypercube; copy count for matching union;
/// rim size for wheel; depth for the binary tree). `m` is the second part of
/// a complete bipartite graph (defaults to `n`) or the degree of a random
/// regular graph (defaults to 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            m: None,
            seed: None,
        }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Same family and secondary parameters at a different primary size.
    pub fn at_size(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    /// Second size parameter with its family default applied.
    pub fn second(&self) -> usize {
        match self.family {
            Family::CompleteBipartite => self.m.unwrap_or(self.n),
            Family::RandomRegular => self.m.unwrap_or(3),
            _ => 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        if f.is_random() != self.seed.is_some() {
            return Err(Error::InvalidFamily(if f.is_random() {
                format!("{f} requires a seed")
            } else {
                format!("{f} does not take a seed")
            }));
        }
        if self.m.is_some() && !matches!(f, Family::CompleteBipartite | Family::RandomRegular) {
            return Err(Error::InvalidFamily(format!(
                "{f} takes a single size parameter"
            )));
        }
        if self.n < f.min_size() {
            return Err(Error::InvalidFamily(format!(
                "{f} needs n >= {}, got {}",
                f.min_size(),
                self.n
            )));
        }
        match f {
            Family::CompleteBipartite if self.second() == 0 => {
                Err(Error::InvalidFamily("complete_bipartite needs m >= 1".into()))
            }
            // Keep 2^d addressable and the graph materializable.
            Family::Hypercube if self.n > 20 => Err(Error::GuardExceeded {
                what: "hypercube dimension",
                limit: 20,
                actual: self.n,
            }),
            Family::CompleteBinaryTree if self.n > 20 => Err(Error::GuardExceeded {
                what: "binary tree depth",
                limit: 20,
                actual: self.n,
            }),
            Family::RandomRegular => check_regular_feasible(self.n, self.second()),
            _ => Ok(()),
        }
    }

    /// Vertex count of the graph this spec describes.
    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::CompleteBipartite => self.n + self.second(),
            Family::Hypercube => 1usize.checked_shl(self.n as u32).unwrap_or(usize::MAX),
            Family::MatchingUnion => 2 * self.n,
            Family::Wheel => self.n + 1,
            Family::CompleteBinaryTree => 1usize
                .checked_shl(self.n as u32 + 1)
                .map_or(usize::MAX, |v| v - 1),
            _ => self.n,
        }
    }

    /// Builds the graph with its canonical labeling.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.n;
        let g = match self.family {
            Family::Path => {
                let mut g = Graph::empty(n);
                for i in 1..n {
                    g.push_edge(i - 1, i);
                }
                g
            }
            Family::Cycle => {
                let mut g = Graph::empty(n);
                for i in 0..n {
                    g.push_edge(i, (i + 1) % n);
                }
                g
            }
            Family::Star => {
                let mut g = Graph::empty(n);
                for i in 1..n {
                    g.push_edge(0, i);
                }
                g
            }
            Family::Complete => {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.push_edge(u, v);
                    }
                }
                g
            }
            Family::CompleteBipartite => {
                let m = self.second();
                let mut g = Graph::empty(n + m);
                for u in 0..n {
                    for v in n..n + m {
                        g.push_edge(u, v);
                    }
                }
                g
            }
            Family::Hypercube => {
                let size = 1usize << n;
                let mut g = Graph::empty(size);
                for v in 0..size {
                    for bit in 0..n {
                        let w = v ^ (1 << bit);
                        if v < w {
                            g.push_edge(v, w);
                        }
                    }
                }
                g
            }
            Family::MatchingUnion => {
                let mut g = Graph::empty(2 * n);
                for i in 0..n {
                    g.push_edge(2 * i, 2 * i + 1);
                }
                g
            }
            Family::Wheel => cone(&FamilySpec::new(Family::Cycle, n).build()?),
            Family::CompleteBinaryTree => {
                let size = (1usize << (n + 1)) - 1;
                let mut g = Graph::empty(size);
                for child in 1..size {
                    g.push_edge((child - 1) / 2, child);
                }
                g
            }
            Family::RandomRegular => random_regular(n, self.second(), self.seed.unwrap())?,
            Family::RandomTree => random_tree(n, self.seed.unwrap()),
        };
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}", self.family, self.n)?;
        if matches!(self.family, Family::CompleteBipartite | Family::RandomRegular) {
            write!(f, ",{}", self.second())?;
        }
        if let Some(seed) = self.seed {
            write!(f, ";seed={seed}")?;
        }
        f.write_str(")")
    }
}

fn check_regular_feasible(n: usize, d: usize) -> Result<()> {
    if !(n * d).is_multiple_of(2) {
        return Err(Error::Infeasible(format!(
            "{n} vertices of degree {d} give an odd degree sum"
        )));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::Infeasible(format!(
            "degree {d} needs more than {n} vertices"
        )));
    }
    Ok(())
}

/// Uniform-ish random `d`-regular graph by the configuration model.
///
/// Stubs are shuffled and paired consecutively; a pairing containing a loop
/// or a repeated edge is thrown away entirely and the stream continues with
/// a fresh shuffle. The result is a deterministic function of `seed`.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    check_regular_feasible(n, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..REGULAR_MAX_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut edges = BTreeSet::new();
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !edges.insert((u, v)) {
                continue 'attempt;
            }
        }
        return Ok(Graph { n, edges });
    }
    Err(Error::Infeasible(format!(
        "no simple {d}-regular pairing on {n} vertices after {REGULAR_MAX_ATTEMPTS} attempts"
    )))
}

/// Random labeled tree decoded from a uniformly random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    if n == 2 {
        g.push_edge(0, 1);
        return g;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();

    let mut remaining = vec![1usize; n];
    for &v in &code {
        remaining[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| remaining[v] == 1).collect();
    for &v in &code {
        let leaf = leaves.pop_first().expect("a Prüfer decode always has a leaf");
        g.push_edge(leaf, v);
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.insert(v);
        }
    }
    let u = leaves.pop_first().unwrap();
    let v = leaves.pop_first().unwrap();
    g.push_edge(u, v);
    g
}
