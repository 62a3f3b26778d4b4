use std::collections::{BTreeMap, VecDeque};

use super::CocycleError;
use crate::affine::{GroupPresentation, Word};

/// Ordered simplicial nerve of a good cover, with a spanning tree and a
/// declared fundamental-group class for every non-tree edge.
///
/// Vertices are ordered by their position in `vertices`; every simplex is
/// stored with increasing vertex indices. Edge `(a, b)` is oriented from
/// chart `a` to chart `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverNerve {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
    tetrahedra: Vec<[usize; 4]>,
    tree: Vec<usize>,
    loops: BTreeMap<usize, Word>,
    presentation: GroupPresentation,
    edge_index: BTreeMap<(usize, usize), usize>,
    triangle_index: BTreeMap<[usize; 3], usize>,
    /// For each vertex, the tree edge towards the root and the parent vertex.
    parent: Vec<Option<(usize, usize)>>,
}

/// Unvalidated nerve description by vertex name.
#[derive(Clone, Debug, Default)]
pub struct NerveSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub triangles: Vec<[String; 3]>,
    pub tetrahedra: Vec<[String; 4]>,
    pub spanning_tree: Vec<[String; 2]>,
    /// Non-tree edge and the word of its loop class.
    pub loops: Vec<([String; 2], String)>,
    pub presentation: GroupPresentation,
}

fn invalid(msg: impl Into<String>) -> CocycleError {
    CocycleError::InvalidNerve(msg.into())
}

impl CoverNerve {
    pub fn new(spec: NerveSpec) -> Result<Self, CocycleError> {
        let NerveSpec {
            vertices,
            edges: edge_names,
            triangles: triangle_names,
            tetrahedra: tetra_names,
            spanning_tree,
            loops: loop_names,
            presentation,
        } = spec;

        if vertices.is_empty() {
            return Err(invalid("nerve has no vertices"));
        }
        let mut vertex_index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(invalid(format!("duplicate vertex {v}")));
            }
        }
        let lookup = |name: &String| -> Result<usize, CocycleError> {
            vertex_index
                .get(name)
                .copied()
                .ok_or_else(|| invalid(format!("unknown vertex {name}")))
        };
        let sorted = |names: &[String]| -> Result<Vec<usize>, CocycleError> {
            let mut ix = names.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
            ix.sort_unstable();
            if ix.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid(format!("degenerate simplex {names:?}")));
            }
            Ok(ix)
        };

        let mut edges = Vec::new();
        let mut edge_index = BTreeMap::new();
        for e in &edge_names {
            let ix = sorted(e)?;
            let key = (ix[0], ix[1]);
            if edge_index.insert(key, edges.len()).is_some() {
                return Err(invalid(format!("duplicate edge {e:?}")));
            }
            edges.push(key);
        }

        let mut triangles = Vec::new();
        let mut triangle_index = BTreeMap::new();
        for t in &triangle_names {
            let ix = sorted(t)?;
            let key = [ix[0], ix[1], ix[2]];
            for (a, b) in [(key[0], key[1]), (key[1], key[2]), (key[0], key[2])] {
                if !edge_index.contains_key(&(a, b)) {
                    return Err(invalid(format!(
                        "triangle {t:?} uses missing edge {}-{}",
                        vertices[a], vertices[b]
                    )));
                }
            }
            if triangle_index.insert(key, triangles.len()).is_some() {
                return Err(invalid(format!("duplicate triangle {t:?}")));
            }
            triangles.push(key);
        }

        let mut tetrahedra = Vec::new();
        for t in &tetra_names {
            let ix = sorted(t)?;
            let key = [ix[0], ix[1], ix[2], ix[3]];
            for skip in 0..4 {
                let face: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| key[i]).collect();
                if !triangle_index.contains_key(&[face[0], face[1], face[2]]) {
                    return Err(invalid(format!("tetrahedron {t:?} has a missing face")));
                }
            }
            tetrahedra.push(key);
        }

        let mut tree = Vec::new();
        for e in &spanning_tree {
            let ix = sorted(e)?;
            let idx = *edge_index
                .get(&(ix[0], ix[1]))
                .ok_or_else(|| invalid(format!("tree edge {e:?} is not an edge")))?;
            if tree.contains(&idx) {
                return Err(invalid(format!("tree edge {e:?} listed twice")));
            }
            tree.push(idx);
        }
        let parent = tree_parents(vertices.len(), &edges, &tree)?;

        let mut loops = BTreeMap::new();
        for (e, word_text) in &loop_names {
            let ix = sorted(e)?;
            let idx = *edge_index
                .get(&(ix[0], ix[1]))
                .ok_or_else(|| invalid(format!("loop edge {e:?} is not an edge")))?;
            if tree.contains(&idx) {
                return Err(invalid(format!("loop edge {e:?} is a tree edge")));
            }
            let word = presentation
                .parse_word(word_text)
                .map_err(|err| invalid(format!("loop word {word_text:?}: {err}")))?;
            // Loop words are stated for the edge's stored orientation.
            let word = if e[0] == vertices[ix[0]] { word } else { word.inverse() };
            if loops.insert(idx, word).is_some() {
                return Err(invalid(format!("loop edge {e:?} declared twice")));
            }
        }
        for (idx, &(a, b)) in edges.iter().enumerate() {
            if !tree.contains(&idx) && !loops.contains_key(&idx) {
                return Err(invalid(format!(
                    "non-tree edge {}-{} has no declared loop word",
                    vertices[a], vertices[b]
                )));
            }
        }
        for (g, name) in presentation.generators().iter().enumerate() {
            if !loops.values().any(|w: &Word| matches!(w.letters(), [l] if l.generator == g)) {
                return Err(invalid(format!("generator {name} is not carried by any loop edge")));
            }
        }

        Ok(Self {
            vertices,
            edges,
            triangles,
            tetrahedra,
            tree,
            loops,
            presentation,
            edge_index,
            triangle_index,
            parent,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn tetrahedra(&self) -> &[[usize; 4]] {
        &self.tetrahedra
    }

    pub fn tree(&self) -> &[usize] {
        &self.tree
    }

    pub fn is_tree_edge(&self, edge: usize) -> bool {
        self.tree.contains(&edge)
    }

    /// Non-tree edges with their loop words, by edge index.
    pub fn loops(&self) -> &BTreeMap<usize, Word> {
        &self.loops
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn triangle(&self, vertices: [usize; 3]) -> Option<usize> {
        let mut v = vertices;
        v.sort_unstable();
        self.triangle_index.get(&v).copied()
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Edge indices `(ab, bc, ac)` of a stored triangle.
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        let [a, b, c] = self.triangles[t];
        [
            self.edge_index[&(a, b)],
            self.edge_index[&(b, c)],
            self.edge_index[&(a, c)],
        ]
    }

    /// Triangle indices of the faces `bcd, acd, abd, abc` of a tetrahedron.
    pub fn tetrahedron_faces(&self, t: usize) -> [usize; 4] {
        let [a, b, c, d] = self.tetrahedra[t];
        [
            self.triangle_index[&[b, c, d]],
            self.triangle_index[&[a, c, d]],
            self.triangle_index[&[a, b, d]],
            self.triangle_index[&[a, b, c]],
        ]
    }

    /// Tree path from the root (vertex 0) to `v` as `(edge, forward)` steps,
    /// where `forward` means the step follows the edge's orientation.
    pub fn tree_path(&self, v: usize) -> Vec<(usize, bool)> {
        let mut steps = Vec::new();
        let mut cur = v;
        while let Some((edge, up)) = self.parent[cur] {
            steps.push((edge, self.edges[edge].1 == cur));
            cur = up;
        }
        steps.reverse();
        steps
    }

    pub fn edge_name(&self, e: usize) -> [String; 2] {
        let (a, b) = self.edges[e];
        [self.vertices[a].clone(), self.vertices[b].clone()]
    }

    pub fn triangle_name(&self, t: usize) -> [String; 3] {
        self.triangles[t].map(|v| self.vertices[v].clone())
    }
}

fn tree_parents(
    n: usize,
    edges: &[(usize, usize)],
    tree: &[usize],
) -> Result<Vec<Option<(usize, usize)>>, CocycleError> {
    if tree.len() + 1 != n {
        return Err(invalid(format!(
            "spanning tree on {n} vertices needs {} edges, found {}",
            n - 1,
            tree.len()
        )));
    }
    let mut adjacency = vec![Vec::new(); n];
    for &e in tree {
        let (a, b) = edges[e];
        adjacency[a].push((e, b));
        adjacency[b].push((e, a));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((e, v));
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(invalid("spanning tree does not reach every vertex"));
    }
    Ok(parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn pair(a: &str, b: &str) -> [String; 2] {
        [a.into(), b.into()]
    }

    fn circle() -> NerveSpec {
        NerveSpec {
            vertices: names(&["U0", "U1", "U2"]),
            edges: vec![pair("U0", "U1"), pair("U1", "U2"), pair("U0", "U2")],
            spanning_tree: vec![pair("U0", "U1"), pair("U1", "U2")],
            loops: vec![(pair("U0", "U2"), "a".into())],
            presentation: GroupPresentation::free(&["a"]).unwrap(),
            ..Default::default()
        }
    }

    #[test]
    fn circle_nerve() {
        let n = CoverNerve::new(circle()).unwrap();
        assert_eq!(n.edges().len(), 3);
        assert_eq!(n.tree_path(2), vec![(0, true), (1, true)]);
        assert_eq!(n.loops()[&2], Word::generator(0));
    }

    #[test]
    fn reversed_loop_edge_inverts_word() {
        let mut spec = circle();
        spec.loops = vec![(pair("U2", "U0"), "a^-1".into())];
        let n = CoverNerve::new(spec).unwrap();
        assert_eq!(n.loops()[&2], Word::generator(0));
    }

    #[test]
    fn rejects_bad_trees() {
        let mut spec = circle();
        spec.spanning_tree = vec![pair("U0", "U1")];
        assert!(CoverNerve::new(spec).is_err());

        let mut spec = circle();
        spec.spanning_tree = vec![pair("U0", "U1"), pair("U0", "U1")];
        assert!(CoverNerve::new(spec).is_err());
    }

    #[test]
    fn rejects_undeclared_loops_and_missing_faces() {
        let mut spec = circle();
        spec.loops.clear();
        assert!(CoverNerve::new(spec).is_err());

        let mut spec = circle();
        spec.edges.pop();
        spec.loops.clear();
        spec.triangles = vec![["U0".into(), "U1".into(), "U2".into()]];
        assert!(CoverNerve::new(spec).is_err());
    }

    #[test]
    fn generator_must_be_carried() {
        let mut spec = circle();
        spec.loops = vec![(pair("U0", "U2"), "".into())];
        assert!(CoverNerve::new(spec).is_err());
    }
}
