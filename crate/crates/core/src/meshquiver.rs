//! The translation quiver on `ℤ₊ × ℤ₊` with arrows `(m,n) → (m,n+1)` and
//! `(m,n) → (m+1,n-1)`, translation `τ(m,n) = (m-1,n)`, and the quotient
//! of its path algebra by the mesh relations, truncated to `m + n ≤ depth`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;

pub type Vertex = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshQuiver {
    depth: usize,
    vertices: Vec<Vertex>,
    arrows: Vec<(Vertex, Vertex)>,
}

pub fn build_mesh_quiver(depth: i64) -> Result<MeshQuiver> {
    if depth < 0 {
        return Err(Error::Invalid(format!("quiver depth must be >= 0, got {depth}")));
    }
    let depth = depth as usize;
    let mut vertices = Vec::new();
    for m in 0..=depth {
        for n in 0..=(depth - m) {
            vertices.push((m, n));
        }
    }
    let mut arrows = Vec::new();
    for &(m, n) in &vertices {
        if m + n < depth {
            arrows.push(((m, n), (m, n + 1)));
        }
        if n > 0 {
            arrows.push(((m, n), (m + 1, n - 1)));
        }
    }
    Ok(MeshQuiver {
        depth,
        vertices,
        arrows,
    })
}

impl MeshQuiver {
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Sorted by `m`, then `n`.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.0 + v.1 <= self.depth
    }

    pub fn tau(&self, v: Vertex) -> Option<Vertex> {
        (v.0 > 0 && self.contains(v)).then(|| (v.0 - 1, v.1))
    }

    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.arrows.iter().filter(move |(s, _)| *s == v).map(|(_, t)| *t)
    }

    /// Middle vertices of the mesh ending at `v`: the length-two paths
    /// `τv → x → v`. `None` when `v` is projective or when a middle vertex
    /// falls outside the truncation.
    pub fn mesh_middles(&self, v: Vertex) -> Option<Vec<Vertex>> {
        let start = self.tau(v)?;
        let mut middles = alloc::vec![(start.0, start.1 + 1)];
        if v.1 > 0 {
            middles.push((v.0, v.1 - 1));
        }
        if middles.iter().all(|&x| self.contains(x)) {
            Some(middles)
        } else {
            None
        }
    }

    /// All paths from `u` to `v`, as vertex sequences.
    pub fn paths(&self, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![u];
        self.paths_rec(v, &mut stack, &mut out);
        out.sort();
        out
    }

    fn paths_rec(&self, target: Vertex, stack: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let cur = *stack.last().unwrap();
        if cur == target {
            out.push(stack.clone());
            return;
        }
        // arrows never decrease m + n, and never decrease m
        if cur.0 > target.0 || cur.0 + cur.1 > target.0 + target.1 {
            return;
        }
        let next: Vec<Vertex> = self.successors(cur).collect();
        for w in next {
            stack.push(w);
            self.paths_rec(target, stack, out);
            stack.pop();
        }
    }

    /// ASCII rendering of the truncated quiver.
    pub fn ascii_diagram(&self) -> String {
        let label = |v: Vertex| format!("({},{})", v.0, v.1);
        let width = self
            .vertices
            .iter()
            .map(|&v| label(v).len())
            .max()
            .unwrap_or(5);
        let cell = width + 4;
        let mut out = String::new();
        for m in 0..=self.depth {
            let mut line = String::new();
            let mut down = String::new();
            for c in 0..=self.depth {
                if c < m {
                    line.push_str(&" ".repeat(cell));
                    down.push_str(&" ".repeat(cell));
                    continue;
                }
                let v = (m, c - m);
                line.push_str(&format!("{:<width$}", label(v)));
                if c < self.depth {
                    line.push_str(" -> ");
                }
                let bar = if v.1 > 0 { "|" } else { " " };
                down.push_str(&format!("{:^width$}    ", bar));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if m < self.depth {
                out.push_str(down.trim_end());
                out.push('\n');
                let arrow = down.replace('|', "v");
                out.push_str(arrow.trim_end());
                out.push('\n');
            }
        }
        out
    }
}

/// Dimensions of `e_v 𝔅 e_u` (paths from `u` to `v` modulo mesh relations)
/// for all vertex pairs of a truncation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimTable {
    entries: BTreeMap<(Vertex, Vertex), usize>,
    provisional: BTreeSet<(Vertex, Vertex)>,
}

impl DimTable {
    pub fn get(&self, from: Vertex, to: Vertex) -> Option<usize> {
        self.entries.get(&(from, to)).copied()
    }

    pub fn entries(&self) -> &BTreeMap<(Vertex, Vertex), usize> {
        &self.entries
    }

    /// Pairs whose dimension depends on a relator dropped by the truncation.
    pub fn provisional(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.provisional
    }

    pub fn is_provisional(&self, from: Vertex, to: Vertex) -> bool {
        self.provisional.contains(&(from, to))
    }
}

/// Path-space dimensions modulo the ideal generated by the mesh relators
/// `Σ_x (τv → x → v)`. For each pair `(u, v)` the ideal is spanned by
/// `p · ρ_w · q` over mesh vertices `w` and paths `p: u → τw`, `q: w → v`;
/// the dimension is `#paths - rank`.
pub fn hom_dimensions(q: &MeshQuiver) -> DimTable {
    let mut table = DimTable::default();
    let relators: Vec<(Vertex, Vertex, Vec<Vertex>)> = q
        .vertices
        .iter()
        .filter_map(|&w| Some((q.tau(w)?, w, q.mesh_middles(w)?)))
        .collect();
    let dropped: Vec<Vertex> = q
        .vertices
        .iter()
        .copied()
        .filter(|&w| q.tau(w).is_some() && q.mesh_middles(w).is_none())
        .collect();
    for &u in &q.vertices {
        for &v in &q.vertices {
            let paths = q.paths(u, v);
            let index: BTreeMap<&Vec<Vertex>, usize> =
                paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut rows: Vec<Vec<BigRational>> = Vec::new();
            for (start, end, middles) in &relators {
                for p in q.paths(u, *start) {
                    for s in q.paths(*end, v) {
                        let mut row = alloc::vec![BigRational::zero(); paths.len()];
                        for x in middles {
                            let mut full = p.clone();
                            full.push(*x);
                            full.extend_from_slice(&s);
                            let i = index[&full];
                            row[i] += BigRational::one();
                        }
                        rows.push(row);
                    }
                }
            }
            let dim = paths.len() - linalg::rank(&rows);
            table.entries.insert((u, v), dim);
            if dropped
                .iter()
                .any(|&w| !q.paths(u, q.tau(w).unwrap()).is_empty() && !q.paths(w, v).is_empty())
            {
                table.provisional.insert((u, v));
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn construction() {
        let q = build_mesh_quiver(0).unwrap();
        assert_eq!(q.vertices(), &[(0, 0)]);
        assert!(q.arrows().is_empty());
        let q = build_mesh_quiver(2).unwrap();
        assert_eq!(q.vertices(), &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]);
        assert!(q.arrows().contains(&((0, 0), (0, 1))));
        assert!(q.arrows().contains(&((0, 1), (1, 0))));
        assert!(q.arrows().contains(&((1, 1), (2, 0))));
        assert_eq!(q.tau((1, 0)), Some((0, 0)));
        assert_eq!(q.tau((0, 2)), None);
        assert!(build_mesh_quiver(-1).is_err());
    }

    #[test]
    fn small_dimensions() {
        let q = build_mesh_quiver(2).unwrap();
        let t = hom_dimensions(&q);
        for &v in q.vertices() {
            assert_eq!(t.get(v, v), Some(1));
        }
        assert_eq!(t.get((0, 0), (0, 1)), Some(1));
        // the only path (0,0) → (0,1) → (1,0) is a mesh relator
        assert_eq!(t.get((0, 0), (1, 0)), Some(0));
        assert_eq!(t.get((0, 1), (0, 0)), Some(0));
        assert!(t.provisional().is_empty());
    }

    #[test]
    fn diagram_layout() {
        let d = build_mesh_quiver(1).unwrap().ascii_diagram();
        let lines: Vec<&str> = d.lines().collect();
        assert_eq!(lines[0], "(0,0) -> (0,1)");
        assert!(lines[1].ends_with('|'));
        assert!(lines[2].ends_with('v'));
        assert_eq!(lines[3].trim(), "(1,0)");
        assert_eq!(vec![lines[3].find('(')], vec![lines[0].rfind('(')]);
    }
}
