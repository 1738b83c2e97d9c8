//! Quivers: the Cayley quiver of (Z/nZ)^t with respect to the Cartan columns,
//! generic quivers for small presentations, separated quivers, and the
//! Dynkin / Euclidean / wild classifier for underlying graphs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};

/// Default cap on n^t for Cayley quivers.
pub const DEFAULT_VERTEX_BUDGET: u64 = 1 << 20;

/// Exponent vector of K^x in (Z/nZ)^t.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupElement(pub Vec<u32>);

impl GroupElement {
    pub fn zero(t: usize) -> Self {
        Self(vec![0; t])
    }

    pub fn add(&self, other: &Self, n: u32) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| (a + b) % n).collect())
    }

    pub fn sub(&self, other: &Self, n: u32) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| (a + n - b) % n).collect())
    }

    /// x·y = Σ x_k y_k mod n, the exponent in the character q^{xy}.
    pub fn pairing(&self, other: &Self, n: u32) -> u32 {
        (self.0.iter().zip(&other.0).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % n as u64) as u32
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "K^({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: u32,
    pub target: u32,
    /// Direction i for Cayley quivers; the arrow index for generic ones.
    pub label: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct CayleyData {
    n: u32,
    t: usize,
    /// columns of C reduced mod n
    columns: Vec<GroupElement>,
    cartan: CartanMatrix,
}

/// A finite quiver. For Cayley quivers vertex indices are the mixed-radix
/// encoding Σ x_k n^k of the exponent vector, and the arrow A(K^c, i) has
/// index i·|Q_0| + c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: u32,
    arrows: Vec<Arrow>,
    outgoing: Vec<Vec<u32>>,
    incoming: Vec<Vec<u32>>,
    cayley: Option<CayleyData>,
}

/// A path, written as in the product: `arrows[0]` is the last arrow and ends at
/// `target`. Length-zero paths are the vertex idempotents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Path {
    pub target: u32,
    pub source: u32,
    pub arrows: Vec<u32>,
}

impl Path {
    pub fn trivial(vertex: u32) -> Self {
        Self { target: vertex, source: vertex, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · other` when `other` ends where `self` starts.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path { target: self.target, source: other.source, arrows })
    }

    /// Drops the last arrow (the leftmost factor).
    pub fn split_first(&self, quiver: &Quiver) -> Option<(u32, Path)> {
        let (&first, rest) = self.arrows.split_first()?;
        let target = quiver.arrow(first).source;
        Some((first, Path { target, source: self.source, arrows: rest.to_vec() }))
    }
}

// Length first, then arrow indices lexicographically. Inside a block with a
// fixed target the Cayley arrow numbering makes this the lexicographic order
// on direction words.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.target.cmp(&other.target))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Quiver {
    /// Quiver with explicit (source, target) arrows; loops and multiple arrows allowed.
    pub fn generic(vertex_count: u32, arrows: &[(u32, u32)]) -> Self {
        let arrows: Vec<Arrow> = arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                assert!(s < vertex_count && t < vertex_count, "arrow endpoint out of range");
                Arrow { source: s, target: t, label: i as u32 }
            })
            .collect();
        Self::assemble(vertex_count, arrows, None)
    }

    /// One vertex with `loops` loops: the free algebra on that many letters.
    pub fn bouquet(loops: usize) -> Self {
        Self::generic(1, &vec![(0, 0); loops])
    }

    fn assemble(vertex_count: u32, arrows: Vec<Arrow>, cayley: Option<CayleyData>) -> Self {
        let mut outgoing = vec![Vec::new(); vertex_count as usize];
        let mut incoming = vec![Vec::new(); vertex_count as usize];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source as usize].push(i as u32);
            incoming[a.target as usize].push(i as u32);
        }
        Self { vertex_count, arrows, outgoing, incoming, cayley }
    }

    /// Cayley graph of (Z/nZ)^t for the columns of C: one arrow
    /// K^{c - a_{·,i}} → K^c for every vertex c and direction i.
    pub fn cayley(c: &CartanMatrix, n: u32, vertex_budget: u64) -> Result<Self> {
        c.require_cartan()?;
        if n == 0 {
            return Err(Error::Scalar(crate::error::ScalarError::InvalidOrder(0)));
        }
        let t = c.size();
        let needed = (n as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
        if needed > vertex_budget as u128 || needed > u32::MAX as u128 / (t as u128 + 1) {
            return Err(Error::Budget { what: "vertices", needed, budget: vertex_budget as u128 });
        }
        let v = needed as u32;
        let columns: Vec<GroupElement> = (0..t).map(|j| GroupElement(c.column(j).iter().map(|&a| a.rem_euclid(n as i64) as u32).collect())).collect();
        let data = CayleyData { n, t, columns, cartan: c.clone() };
        let mut arrows = Vec::with_capacity(t * v as usize);
        for dir in 0..t {
            for target in 0..v {
                let x = decode(target, n, t);
                let s = x.sub(&data.columns[dir], n);
                arrows.push(Arrow { source: encode(&s, n), target, label: dir as u32 });
            }
        }
        let q = Self::assemble(v, arrows, Some(data));
        if n > 2 {
            debug_assert!(q.arrows.iter().all(|a| a.source != a.target), "Cayley quiver has a loop");
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, id: u32) -> Arrow {
        self.arrows[id as usize]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn outgoing(&self, v: u32) -> &[u32] {
        &self.outgoing[v as usize]
    }

    pub fn incoming(&self, v: u32) -> &[u32] {
        &self.incoming[v as usize]
    }

    pub fn is_cayley(&self) -> bool {
        self.cayley.is_some()
    }

    fn cayley_data(&self) -> Result<&CayleyData> {
        self.cayley.as_ref().ok_or(Error::NotCayley)
    }

    /// (n, t) of a Cayley quiver.
    pub fn cayley_params(&self) -> Option<(u32, usize)> {
        self.cayley.as_ref().map(|d| (d.n, d.t))
    }

    pub fn cartan(&self) -> Option<&CartanMatrix> {
        self.cayley.as_ref().map(|d| &d.cartan)
    }

    pub fn element(&self, v: u32) -> Result<GroupElement> {
        let d = self.cayley_data()?;
        Ok(decode(v, d.n, d.t))
    }

    pub fn vertex_of(&self, x: &GroupElement) -> Result<u32> {
        let d = self.cayley_data()?;
        Ok(encode(x, d.n))
    }

    /// Column a_{·,i} as a group element.
    pub fn column(&self, i: usize) -> Result<&GroupElement> {
        Ok(&self.cayley_data()?.columns[i])
    }

    /// The arrow A(K^c, i).
    pub fn cayley_arrow(&self, target: u32, dir: usize) -> Result<u32> {
        let d = self.cayley_data()?;
        if dir >= d.t {
            return Err(Error::Unsupported(format!("direction {dir} out of range")));
        }
        Ok(dir as u32 * self.vertex_count + target)
    }

    /// The path A(K^c, i_m … i_1); `dirs[0]` is i_m, the direction of the last arrow.
    pub fn cayley_path(&self, target: u32, dirs: &[usize]) -> Result<Path> {
        let mut arrows = Vec::with_capacity(dirs.len());
        let mut cur = target;
        for &d in dirs {
            let a = self.cayley_arrow(cur, d)?;
            arrows.push(a);
            cur = self.arrows[a as usize].source;
        }
        Ok(Path { target, source: cur, arrows })
    }

    /// Direction word of a path (arrow labels).
    pub fn word(&self, p: &Path) -> Vec<u32> {
        p.arrows.iter().map(|&a| self.arrows[a as usize].label).collect()
    }

    /// Weak connectivity. Labels are assigned in order of the smallest vertex.
    pub fn connected_components(&self) -> Components {
        let v = self.vertex_count as usize;
        let mut labels = vec![u32::MAX; v];
        let mut count = 0u32;
        for start in 0..v {
            if labels[start] != u32::MAX {
                continue;
            }
            labels[start] = count;
            let mut queue = VecDeque::from([start as u32]);
            while let Some(x) = queue.pop_front() {
                let nbrs = self.outgoing[x as usize]
                    .iter()
                    .map(|&a| self.arrows[a as usize].target)
                    .chain(self.incoming[x as usize].iter().map(|&a| self.arrows[a as usize].source));
                for y in nbrs {
                    if labels[y as usize] == u32::MAX {
                        labels[y as usize] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        Components { count: count as usize, labels }
    }

    /// Vertices Q_0 × {0, 1} (level-1 copy of v is |Q_0| + v); each arrow
    /// a becomes (s(a), 0) → (t(a), 1).
    pub fn separated(&self) -> Quiver {
        let v = self.vertex_count;
        let arrows: Vec<Arrow> = self.arrows.iter().map(|a| Arrow { source: a.source, target: v + a.target, label: a.label }).collect();
        Self::assemble(2 * v, arrows, None)
    }

    /// Number of arrows u → v.
    pub fn arrows_between(&self, u: u32, v: u32) -> usize {
        self.outgoing[u as usize].iter().filter(|&&a| self.arrows[a as usize].target == v).count()
    }

    /// Graph-description export in DOT syntax.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n");
        for v in 0..self.vertex_count {
            let label = match &self.cayley {
                Some(d) => decode(v, d.n, d.t).to_string(),
                None => format!("v{v}"),
            };
            out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
        }
        for (i, a) in self.arrows.iter().enumerate() {
            let label = if self.cayley.is_some() { format!("{}", a.label + 1) } else { format!("a{i}") };
            out.push_str(&format!("  {} -> {} [label=\"{label}\"];\n", a.source, a.target));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn encode(x: &GroupElement, n: u32) -> u32 {
    x.0.iter().rev().fold(0u32, |acc, &c| acc * n + c)
}

pub(crate) fn decode(mut v: u32, n: u32, t: usize) -> GroupElement {
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        out.push(v % n);
        v /= n;
    }
    GroupElement(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    pub labels: Vec<u32>,
}

impl Components {
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            out[c as usize].push(v as u32);
        }
        out
    }
}

/// Simply-laced diagram name: A_k, D_k or E_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Diagram {
    A(u32),
    D(u32),
    E(u32),
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(k) => write!(f, "A{k}"),
            Diagram::D(k) => write!(f, "D{k}"),
            Diagram::E(k) => write!(f, "E{k}"),
        }
    }
}

/// Label of one weakly connected component of an underlying graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GraphClass {
    Dynkin(Diagram),
    /// Extended Dynkin diagram; `Euclidean(A(k))` is Ã_k with k+1 vertices.
    Euclidean(Diagram),
    Wild,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(d) => write!(f, "{d}"),
            GraphClass::Euclidean(d) => write!(f, "~{d}"),
            GraphClass::Wild => write!(f, "wild"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<u32>,
    pub class: GraphClass,
}

/// Matches every weak component's underlying multigraph (orientation dropped,
/// loops kept) against the Dynkin and extended Dynkin lists.
pub fn classify_underlying_graph(q: &Quiver) -> Vec<ComponentClass> {
    let comps = q.connected_components();
    let mut edges_by_comp: Vec<Vec<(u32, u32)>> = vec![Vec::new(); comps.count];
    for a in q.arrows() {
        edges_by_comp[comps.labels[a.source as usize] as usize].push((a.source, a.target));
    }
    comps
        .members()
        .into_iter()
        .zip(edges_by_comp)
        .map(|(vertices, edges)| {
            let class = classify_connected(&vertices, &edges);
            ComponentClass { vertices, class }
        })
        .collect()
}

/// Tally of component labels, e.g. {A2: 5}.
pub fn class_histogram(classes: &[ComponentClass]) -> BTreeMap<GraphClass, usize> {
    let mut out = BTreeMap::new();
    for c in classes {
        *out.entry(c.class).or_insert(0) += 1;
    }
    out
}

fn classify_connected(vertices: &[u32], edges: &[(u32, u32)]) -> GraphClass {
    let v = vertices.len();
    let e = edges.len();
    let index: BTreeMap<u32, usize> = vertices.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut degree = vec![0usize; v];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); v];
    let mut loops = 0;
    let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(s, t) in edges {
        let (a, b) = (index[&s], index[&t]);
        if a == b {
            loops += 1;
            degree[a] += 2;
            continue;
        }
        degree[a] += 1;
        degree[b] += 1;
        adj[a].push(b);
        adj[b].push(a);
        *multiplicity.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    let multi_edge = multiplicity.values().any(|&m| m > 1);

    if e + 1 == v {
        // tree
        return classify_tree(&degree, &adj);
    }
    if e == v {
        // exactly one cycle: a loop, a double edge, or a simple cycle
        if v == 1 && loops == 1 {
            return GraphClass::Euclidean(Diagram::A(0));
        }
        if loops > 0 {
            return GraphClass::Wild;
        }
        if v == 2 && multi_edge {
            return GraphClass::Euclidean(Diagram::A(1));
        }
        if !multi_edge && degree.iter().all(|&d| d == 2) {
            return GraphClass::Euclidean(Diagram::A(v as u32 - 1));
        }
    }
    GraphClass::Wild
}

fn classify_tree(degree: &[usize], adj: &[Vec<usize>]) -> GraphClass {
    let v = degree.len();
    let max = degree.iter().copied().max().unwrap_or(0);
    if max <= 2 {
        return GraphClass::Dynkin(Diagram::A(v as u32));
    }
    let branch: Vec<usize> = (0..v).filter(|&x| degree[x] >= 3).collect();
    if max == 4 {
        if v == 5 && branch.len() == 1 {
            return GraphClass::Euclidean(Diagram::D(4));
        }
        return GraphClass::Wild;
    }
    if max > 4 {
        return GraphClass::Wild;
    }
    match branch.len() {
        1 => {
            let center = branch[0];
            let mut arms: Vec<usize> = adj[center].iter().map(|&start| arm_length(adj, center, start)).collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, r) => GraphClass::Dynkin(Diagram::D(r as u32 + 3)),
                (1, 2, 2) => GraphClass::Dynkin(Diagram::E(6)),
                (1, 2, 3) => GraphClass::Dynkin(Diagram::E(7)),
                (1, 2, 4) => GraphClass::Dynkin(Diagram::E(8)),
                (2, 2, 2) => GraphClass::Euclidean(Diagram::E(6)),
                (1, 3, 3) => GraphClass::Euclidean(Diagram::E(7)),
                (1, 2, 5) => GraphClass::Euclidean(Diagram::E(8)),
                _ => GraphClass::Wild,
            }
        }
        2 => {
            // D̃_k: both branch points carry two leaves
            let leafy = |c: usize| adj[c].iter().filter(|&&y| degree[y] == 1).count() >= 2;
            if branch.iter().all(|&c| leafy(c)) {
                GraphClass::Euclidean(Diagram::D(v as u32 - 1))
            } else {
                GraphClass::Wild
            }
        }
        _ => GraphClass::Wild,
    }
}

/// Vertices on the arm leaving `center` through `start` (a path in a tree
/// whose inner vertices have degree 2).
fn arm_length(adj: &[Vec<usize>], center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&y| y != prev).collect();
        match next.as_slice() {
            [only] => {
                prev = cur;
                cur = *only;
                len += 1;
            }
            _ => return len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cayley(name: &str, n: u32) -> Quiver {
        Quiver::cayley(&CartanMatrix::named(name).unwrap(), n, DEFAULT_VERTEX_BUDGET).unwrap()
    }

    fn path_graph(k: u32) -> Quiver {
        let edges: Vec<(u32, u32)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Quiver::generic(k, &edges)
    }

    fn star(arms: &[u32]) -> Quiver {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Quiver::generic(next, &edges)
    }

    fn single_class(q: &Quiver) -> GraphClass {
        let c = classify_underlying_graph(q);
        assert_eq!(c.len(), 1);
        c[0].class
    }

    #[test]
    fn sl2_cycle_shapes() {
        let q5 = cayley("A1", 5);
        assert_eq!(q5.vertex_count(), 5);
        assert_eq!(q5.arrow_count(), 5);
        for a in q5.arrows() {
            assert_eq!((a.source + 2) % 5, a.target);
        }
        assert_eq!(q5.connected_components().count, 1);
        assert_eq!(single_class(&q5), GraphClass::Euclidean(Diagram::A(4)));

        let q6 = cayley("A1", 6);
        let comps = q6.connected_components();
        assert_eq!(comps.count, 2);
        for m in comps.members() {
            assert_eq!(m.len(), 3);
        }
    }

    #[test]
    fn a2_counts_and_degrees() {
        let q = cayley("A2", 5);
        assert_eq!(q.vertex_count(), 25);
        assert_eq!(q.arrow_count(), 50);
        for v in 0..25 {
            assert_eq!(q.outgoing(v).len(), 2);
            assert_eq!(q.incoming(v).len(), 2);
        }
    }

    #[test]
    fn arrow_source_formula_round_trips() {
        let q = cayley("A2", 7);
        for target in 0..q.vertex_count() {
            for dir in 0..2 {
                let a = q.arrow(q.cayley_arrow(target, dir).unwrap());
                assert_eq!(a.target, target);
                let s = q.element(a.source).unwrap();
                let back = s.add(q.column(dir).unwrap(), 7);
                assert_eq!(q.vertex_of(&back).unwrap(), target);
            }
        }
    }

    #[test]
    fn component_examples() {
        assert_eq!(cayley("A1xA1", 6).connected_components().count, 4);
        assert_eq!(cayley("A2", 6).connected_components().count, 3);
    }

    #[test]
    fn budget_guard() {
        let c = CartanMatrix::named("A3").unwrap();
        assert!(matches!(Quiver::cayley(&c, 10, 999), Err(Error::Budget { .. })));
    }

    #[test]
    fn separated_quiver_shapes() {
        let s = cayley("A1", 5).separated();
        assert_eq!(s.vertex_count(), 10);
        assert_eq!(s.arrow_count(), 5);
        for v in 0..5 {
            assert_eq!(s.outgoing(v).len(), 1);
            assert_eq!(s.arrow(s.outgoing(v)[0]).target, 5 + (v + 2) % 5);
        }
        let classes = classify_underlying_graph(&s);
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.class == GraphClass::Dynkin(Diagram::A(2))));

        let s2 = cayley("A2", 5).separated();
        assert_eq!((s2.vertex_count(), s2.arrow_count()), (50, 50));
        assert!((0..25).all(|v| s2.outgoing(v).len() == 2));

        let s3 = cayley("A3", 5).separated();
        assert!((0..125).all(|v| s3.outgoing(v).len() == 3));
        assert!(classify_underlying_graph(&s3).iter().all(|c| c.class == GraphClass::Wild));
    }

    #[test]
    fn reference_dynkin_shapes() {
        let cases: Vec<(Quiver, GraphClass)> = vec![
            (path_graph(1), GraphClass::Dynkin(Diagram::A(1))),
            (path_graph(2), GraphClass::Dynkin(Diagram::A(2))),
            (path_graph(5), GraphClass::Dynkin(Diagram::A(5))),
            (path_graph(8), GraphClass::Dynkin(Diagram::A(8))),
            (star(&[1, 1, 1]), GraphClass::Dynkin(Diagram::D(4))),
            (star(&[1, 1, 2]), GraphClass::Dynkin(Diagram::D(5))),
            (star(&[1, 1, 5]), GraphClass::Dynkin(Diagram::D(8))),
            (star(&[1, 2, 2]), GraphClass::Dynkin(Diagram::E(6))),
            (star(&[1, 2, 3]), GraphClass::Dynkin(Diagram::E(7))),
            (star(&[1, 2, 4]), GraphClass::Dynkin(Diagram::E(8))),
        ];
        for (q, expected) in cases {
            assert_eq!(single_class(&q), expected);
        }
    }

    #[test]
    fn reference_euclidean_shapes() {
        let cycle = |k: u32| {
            let edges: Vec<(u32, u32)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Quiver::generic(k, &edges)
        };
        // D̃_5: two branch points joined by one edge, two leaves each
        let d5 = Quiver::generic(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        // D̃_7
        let d7 = Quiver::generic(8, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (5, 7)]);
        let cases: Vec<(Quiver, GraphClass)> = vec![
            (Quiver::bouquet(1), GraphClass::Euclidean(Diagram::A(0))),
            (Quiver::generic(2, &[(0, 1), (1, 0)]), GraphClass::Euclidean(Diagram::A(1))),
            (Quiver::generic(2, &[(0, 1), (0, 1)]), GraphClass::Euclidean(Diagram::A(1))),
            (cycle(3), GraphClass::Euclidean(Diagram::A(2))),
            (cycle(6), GraphClass::Euclidean(Diagram::A(5))),
            (star(&[1, 1, 1, 1]), GraphClass::Euclidean(Diagram::D(4))),
            (d5, GraphClass::Euclidean(Diagram::D(5))),
            (d7, GraphClass::Euclidean(Diagram::D(7))),
            (star(&[2, 2, 2]), GraphClass::Euclidean(Diagram::E(6))),
            (star(&[1, 3, 3]), GraphClass::Euclidean(Diagram::E(7))),
            (star(&[1, 2, 5]), GraphClass::Euclidean(Diagram::E(8))),
        ];
        for (q, expected) in cases {
            assert_eq!(single_class(&q), expected, "{}", q.to_dot("x"));
        }
    }

    #[test]
    fn wild_shapes() {
        let cases = vec![
            Quiver::bouquet(2),
            Quiver::generic(2, &[(0, 1), (0, 1), (0, 1)]),
            star(&[1, 1, 1, 1, 1]),
            star(&[2, 2, 3]),
            star(&[1, 1, 1, 2]),
            Quiver::generic(3, &[(0, 1), (1, 2), (2, 0), (0, 0)]),
            Quiver::generic(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]),
        ];
        for q in cases {
            assert_eq!(single_class(&q), GraphClass::Wild, "{}", q.to_dot("x"));
        }
    }

    #[test]
    fn paths_compose_by_endpoints() {
        let q = cayley("A2", 5);
        let p = q.cayley_path(7, &[0]).unwrap();
        let r = q.cayley_path(p.source, &[1]).unwrap();
        let pr = p.compose(&r).unwrap();
        assert_eq!(pr, q.cayley_path(7, &[0, 1]).unwrap());
        assert!(r.compose(&p).is_none() || r.source == p.target);
        let (first, rest) = pr.split_first(&q).unwrap();
        assert_eq!(first, p.arrows[0]);
        assert_eq!(rest, r);
        assert_eq!(q.word(&pr), vec![0, 1]);
    }

    #[test]
    fn dot_export_lists_everything() {
        let dot = cayley("A1", 5).to_dot("sl2");
        assert_eq!(dot.matches("->").count(), 5);
        assert!(dot.contains("K^(3)"));
    }
}
