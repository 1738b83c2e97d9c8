//! Path-algebra elements and the graded quotient engine.
//!
//! The quotient k^Q / J is built degree by degree. At degree d every path is
//! congruent to a·s with `a` an arrow and `s` a standard path of degree d-1, so
//! only those candidates become columns; relations are the generators times
//! standard paths, rewritten into candidates. Everything splits into blocks
//! keyed by (target, source), which are echelonized independently.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::cartan::CartanMatrix;
use crate::cyclotomic::{nilpotency_order, Field};
use crate::error::{Error, Result};
use crate::linalg::{collect_row, Echelon, SparseRow};
use crate::quiver::{Path, Quiver};

/// Finitely supported linear combination; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, E> {
    terms: BTreeMap<K, E>,
}

impl<K: Ord, E> Default for LinComb<K, E> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, E: Clone> LinComb<K, E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis<F: Field<Elem = E>>(field: &F, key: K) -> Self {
        Self::monomial(field, key, field.one())
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, key: K, coeff: E) -> Self {
        let mut out = Self::zero();
        out.add_term(field, key, coeff);
        out
    }

    pub fn from_terms<F: Field<Elem = E>>(field: &F, terms: impl IntoIterator<Item = (K, E)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(field, k, c);
        }
        out
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, key: K, coeff: E) {
        if field.is_zero(&coeff) {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                let v = field.add(slot, &coeff);
                if field.is_zero(&v) {
                    self.terms.remove(&key);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(field, k.clone(), c.clone());
        }
        out
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(field, k.clone(), field.neg(c));
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        if field.is_zero(s) {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), field.mul(c, s))).collect() }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), field.neg(c))).collect() }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<K2: Ord + Clone, F: Field<Elem = E>>(&self, field: &F, mut f: impl FnMut(&K) -> LinComb<K2, E>) -> LinComb<K2, E> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(k).terms {
                out.add_term(field, k2, field.mul(c, &c2));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> Option<&E> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &E)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Relabels keys through an injective map (coefficients unchanged).
    pub fn map_keys_injective<K2: Ord>(&self, f: impl Fn(&K) -> K2) -> LinComb<K2, E> {
        let terms: BTreeMap<K2, E> = self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect();
        assert_eq!(terms.len(), self.terms.len(), "key map is not injective");
        LinComb { terms }
    }

    pub fn into_terms(self) -> BTreeMap<K, E> {
        self.terms
    }

    pub fn render<F: Field<Elem = E>>(&self, field: &F, key: impl Fn(&K) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(k, c)| if field.is_one(c) { key(k) } else { format!("({})·{}", field.render(c), key(k)) }).collect::<Vec<_>>().join(" + ")
    }
}

/// Linear combination of paths (the Dirac-mass basis of k^Q).
pub type AlgebraElement<E> = LinComb<Path, E>;

impl<E: Clone> LinComb<Path, E> {
    pub fn vertex<F: Field<Elem = E>>(field: &F, v: u32) -> Self {
        Self::basis(field, Path::trivial(v))
    }

    pub fn path<F: Field<Elem = E>>(field: &F, p: Path) -> Self {
        Self::basis(field, p)
    }

    /// Concatenation extended bilinearly; non-composable pairs vanish.
    pub fn multiply<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (r, b) in &other.terms {
                if let Some(pr) = p.compose(r) {
                    out.add_term(field, pr, field.mul(a, b));
                }
            }
        }
        out
    }

    /// Common length of all terms, if any.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Path::len);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    /// Common (target, source) of all terms, if any.
    pub fn endpoints(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|p| (p.target, p.source));
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Splits into (target, source, degree) components.
    pub fn components(&self) -> BTreeMap<(u32, u32, usize), Self> {
        let mut out: BTreeMap<(u32, u32, usize), Self> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry((p.target, p.source, p.len())).or_default().terms.insert(p.clone(), c.clone());
        }
        out
    }
}

/// Which defining family a generator of J belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Family {
    /// δ_{A(K^c, i^e)}
    Nilpotent { dir: usize },
    /// δ_{A(K^c, ij)} - δ_{A(K^c, ji)}, i < j, a_ij = 0
    CommutingSquare { i: usize, j: usize },
    /// quantum Serre cubic for the ordered pair (i, j), a_ij = -1
    Serre { i: usize, j: usize },
    /// (E_iE_j - q^{-1}E_jE_i)^e for i < j, a_ij = -1: power of a height-two
    /// root vector. Not part of the default set; opt-in diagnostic.
    RootVectorPower { i: usize, j: usize },
    /// relation supplied by a presentation
    Custom { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<E> {
    pub family: Family,
    pub target: u32,
    pub source: u32,
    pub degree: usize,
    pub element: AlgebraElement<E>,
}

/// Homogeneous generators of a two-sided ideal, each with fixed endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerators<E> {
    pub generators: Vec<Generator<E>>,
}

impl<E: Clone> IdealGenerators<E> {
    /// The defining ideal of u_q^+ on a Cayley quiver: for every target vertex
    /// the e-th directional powers, the commuting squares and the Serre cubics.
    pub fn cayley<F: Field<Elem = E>>(field: &F, quiver: &Quiver) -> Result<Self> {
        let cartan = quiver.cartan().ok_or(Error::NotCayley)?.clone();
        let (n, t) = quiver.cayley_params().ok_or(Error::NotCayley)?;
        if field.order() != n {
            return Err(Error::Unsupported(format!("scalar field has q of order {}, quiver needs {n}", field.order())));
        }
        let e = nilpotency_order(n) as usize;
        let serre = field.neg(&field.add(&field.q(), &field.q_power(-1)));
        let mut generators = Vec::new();
        for c in 0..quiver.vertex_count() {
            let mut push = |family: Family, terms: Vec<(Vec<usize>, E)>| -> Result<()> {
                let mut el = AlgebraElement::zero();
                for (word, coeff) in terms {
                    el.add_term(field, quiver.cayley_path(c, &word)?, coeff);
                }
                let (target, source) = el.endpoints().expect("relation terms share endpoints");
                let degree = el.degree().expect("relation is homogeneous");
                generators.push(Generator { family, target, source, degree, element: el });
                Ok(())
            };
            for i in 0..t {
                push(Family::Nilpotent { dir: i }, vec![(vec![i; e], field.one())])?;
            }
            for i in 0..t {
                for j in 0..t {
                    if i == j {
                        continue;
                    }
                    match cartan.entry(i, j) {
                        0 if i < j => push(Family::CommutingSquare { i, j }, vec![(vec![i, j], field.one()), (vec![j, i], field.neg(&field.one()))])?,
                        -1 => push(Family::Serre { i, j }, vec![(vec![i, i, j], field.one()), (vec![i, j, i], serre.clone()), (vec![j, i, i], field.one())])?,
                        _ => {}
                    }
                }
            }
        }
        Ok(Self { generators })
    }

    /// Appends e-th powers of the height-two root vectors E_iE_j - q^{-1}E_jE_i,
    /// one per target vertex and pair i < j with a_ij = -1.
    pub fn add_root_vector_powers<F: Field<Elem = E>>(&mut self, field: &F, quiver: &Quiver) -> Result<()> {
        let cartan = quiver.cartan().ok_or(Error::NotCayley)?.clone();
        let (n, t) = quiver.cayley_params().ok_or(Error::NotCayley)?;
        let e = nilpotency_order(n) as usize;
        for i in 0..t {
            for j in (i + 1)..t {
                if cartan.entry(i, j) != -1 {
                    continue;
                }
                let base = [(vec![i, j], field.one()), (vec![j, i], field.neg(&field.q_power(-1)))];
                let mut power: BTreeMap<Vec<usize>, E> = BTreeMap::from([(Vec::new(), field.one())]);
                for _ in 0..e {
                    let mut next: BTreeMap<Vec<usize>, E> = BTreeMap::new();
                    for (w, c) in &power {
                        for (b, cb) in &base {
                            let mut word = w.clone();
                            word.extend_from_slice(b);
                            let v = field.mul(c, cb);
                            let slot = next.entry(word).or_insert_with(|| field.zero());
                            *slot = field.add(slot, &v);
                        }
                    }
                    next.retain(|_, c| !field.is_zero(c));
                    power = next;
                }
                for c in 0..quiver.vertex_count() {
                    let mut el = AlgebraElement::zero();
                    for (w, coeff) in &power {
                        el.add_term(field, quiver.cayley_path(c, w)?, coeff.clone());
                    }
                    let Some((target, source)) = el.endpoints() else { continue };
                    self.generators.push(Generator { family: Family::RootVectorPower { i, j }, target, source, degree: 2 * e, element: el });
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }
}

/// Knobs for [`GradedQuotient::build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Last degree computed; the build stops earlier once a degree vanishes.
    pub max_degree: usize,
    /// Largest admissible candidate count of a single block.
    pub block_budget: usize,
    pub parallel: bool,
}

impl BuildOptions {
    pub fn up_to(max_degree: usize) -> Self {
        Self { max_degree, block_budget: 2_000_000, parallel: true }
    }
}

#[derive(Clone, Debug)]
struct Block<E> {
    /// candidate paths a·s, sorted; column index = position
    columns: Vec<Path>,
    /// reduced pivot rows, keyed by pivot column
    pivots: BTreeMap<usize, SparseRow<E>>,
    /// non-pivot columns
    standard: Vec<usize>,
}

impl<E> Block<E> {
    fn column_of(&self, p: &Path) -> Option<usize> {
        self.columns.binary_search(p).ok()
    }
}

type Level<E> = BTreeMap<(u32, u32), Block<E>>;

/// Degreewise normal-form data of k^Q / J.
#[derive(Clone, Debug)]
pub struct GradedQuotient<F: Field> {
    field: F,
    quiver: Quiver,
    generators: IdealGenerators<F::Elem>,
    /// levels[d] for d ≥ 1; index 0 unused (degree 0 is the vertex set)
    levels: Vec<Level<F::Elem>>,
    complete: bool,
}

impl<F: Field> GradedQuotient<F> {
    /// u_q^+ on a Cayley quiver, built until it vanishes; capped one degree
    /// past the top of the PBW series.
    pub fn for_cayley(field: &F, quiver: &Quiver) -> Result<Self> {
        let cartan: &CartanMatrix = quiver.cartan().ok_or(Error::NotCayley)?;
        let cap = cartan.pbw_top_degree(field.order())? + 1;
        Self::for_cayley_up_to(field, quiver, cap)
    }

    pub fn for_cayley_up_to(field: &F, quiver: &Quiver, max_degree: usize) -> Result<Self> {
        let gens = IdealGenerators::cayley(field, quiver)?;
        Self::build(field, quiver, gens, BuildOptions::up_to(max_degree))
    }

    pub fn build(field: &F, quiver: &Quiver, generators: IdealGenerators<F::Elem>, opts: BuildOptions) -> Result<Self> {
        for (index, g) in generators.generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::NonHomogeneous { index, reason: "relation of degree 0".into() });
            }
            if g.element.degree() != Some(g.degree) || g.element.endpoints() != Some((g.target, g.source)) {
                return Err(Error::NonHomogeneous { index, reason: "terms differ in length or endpoints".into() });
            }
        }
        let mut by_target: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, g) in generators.generators.iter().enumerate() {
            by_target.entry(g.target).or_default().push(i);
        }
        let mut out = Self { field: field.clone(), quiver: quiver.clone(), generators, levels: vec![Level::new()], complete: false };
        for d in 1..=opts.max_degree {
            let keys = out.candidate_keys(d);
            let build_block = |key: &(u32, u32)| out.build_block(d, *key, &by_target, opts.block_budget).map(|b| (*key, b));
            let blocks: Vec<((u32, u32), Block<F::Elem>)> =
                if opts.parallel { keys.par_iter().map(build_block).collect::<Result<_>>()? } else { keys.iter().map(build_block).collect::<Result<_>>()? };
            let level: Level<F::Elem> = blocks.into_iter().filter(|(_, b)| !b.standard.is_empty() || !b.columns.is_empty()).collect();
            let dim: usize = level.values().map(|b| b.standard.len()).sum();
            out.levels.push(level);
            if dim == 0 {
                out.complete = true;
                break;
            }
        }
        Ok(out)
    }

    /// Blocks (target, source) that receive at least one candidate at degree d.
    fn candidate_keys(&self, d: usize) -> Vec<(u32, u32)> {
        let mut keys = BTreeSet::new();
        if d == 1 {
            for a in self.quiver.arrows() {
                keys.insert((a.target, a.source));
            }
        } else {
            for (&(w, v), block) in &self.levels[d - 1] {
                if block.standard.is_empty() {
                    continue;
                }
                for &a in self.quiver.outgoing(w) {
                    keys.insert((self.quiver.arrow(a).target, v));
                }
            }
        }
        keys.into_iter().collect()
    }

    /// Standard paths of degree d in block (target, source).
    fn standard_in(&self, d: usize, key: (u32, u32)) -> Vec<Path> {
        if d == 0 {
            return if key.0 == key.1 && key.0 < self.quiver.vertex_count() { vec![Path::trivial(key.0)] } else { Vec::new() };
        }
        match self.levels.get(d).and_then(|l| l.get(&key)) {
            Some(b) => b.standard.iter().map(|&c| b.columns[c].clone()).collect(),
            None => Vec::new(),
        }
    }

    fn build_block(&self, d: usize, (u, v): (u32, u32), by_target: &BTreeMap<u32, Vec<usize>>, budget: usize) -> Result<Block<F::Elem>> {
        let f = &self.field;
        let mut columns = Vec::new();
        for &a in self.quiver.incoming(u) {
            let arrow = Path { target: u, source: self.quiver.arrow(a).source, arrows: vec![a] };
            for s in self.standard_in(d - 1, (arrow.source, v)) {
                columns.push(arrow.compose(&s).expect("composable by construction"));
            }
        }
        if columns.len() > budget {
            return Err(Error::Budget { what: "block candidates", needed: columns.len() as u128, budget: budget as u128 });
        }
        columns.sort();
        let mut block = Block { columns, pivots: BTreeMap::new(), standard: Vec::new() };
        let mut ech = Echelon::<F>::new();
        for &gi in by_target.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
            let g = &self.generators.generators[gi];
            if g.degree > d {
                continue;
            }
            for s in self.standard_in(d - g.degree, (g.source, v)) {
                let gs = g.element.multiply(f, &AlgebraElement::path(f, s));
                let row = self.rewrite_into(&block, &gs)?;
                ech.insert(f, row);
            }
        }
        ech.finish(f);
        block.standard = (0..block.columns.len()).filter(|&c| !ech.is_pivot(c)).collect();
        block.pivots = ech.into_pivots();
        Ok(block)
    }

    /// ρ: each path a·r becomes a·nf(r), expressed in the block's columns.
    fn rewrite_into(&self, block: &Block<F::Elem>, el: &AlgebraElement<F::Elem>) -> Result<SparseRow<F::Elem>> {
        let f = &self.field;
        let mut entries = Vec::new();
        for (p, c) in el.iter() {
            let (a, rest) = p.split_first(&self.quiver).expect("positive length");
            let head = Path { target: p.target, source: rest.target, arrows: vec![a] };
            for (s, cs) in self.nf_path(&rest)?.iter() {
                let col = block.column_of(&head.compose(s).expect("composable")).expect("candidate column present");
                entries.push((col, f.mul(c, cs)));
            }
        }
        Ok(collect_row(f, entries))
    }

    fn nf_path(&self, p: &Path) -> Result<AlgebraElement<F::Elem>> {
        let f = &self.field;
        let d = p.len();
        if d == 0 {
            return Ok(AlgebraElement::path(f, p.clone()));
        }
        let Some(level) = self.levels.get(d) else {
            return if self.complete { Ok(AlgebraElement::zero()) } else { Err(Error::Truncated { built: self.levels.len() - 1, requested: d }) };
        };
        let Some(block) = level.get(&(p.target, p.source)) else {
            return Ok(AlgebraElement::zero());
        };
        if let Some(c) = block.column_of(p) {
            if !block.pivots.contains_key(&c) {
                return Ok(AlgebraElement::path(f, p.clone()));
            }
        }
        let row = self.rewrite_into(block, &AlgebraElement::path(f, p.clone()))?;
        let reduced = self.reduce_row(block, row);
        Ok(AlgebraElement::from_terms(f, reduced.into_iter().map(|(c, x)| (block.columns[c].clone(), x))))
    }

    fn reduce_row(&self, block: &Block<F::Elem>, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let f = &self.field;
        let mut idx = row.len();
        while idx > 0 {
            idx -= 1;
            let (col, coeff) = row[idx].clone();
            if let Some(p) = block.pivots.get(&col) {
                row = crate::linalg::axpy(f, &row, &f.neg(&coeff), p);
                idx = row.partition_point(|(c, _)| *c < col);
            }
        }
        row
    }

    /// Canonical representative modulo J.
    pub fn normal_form(&self, el: &AlgebraElement<F::Elem>) -> Result<AlgebraElement<F::Elem>> {
        let f = &self.field;
        let mut out = AlgebraElement::zero();
        for (p, c) in el.iter() {
            for (s, x) in self.nf_path(p)?.iter() {
                out.add_term(f, s.clone(), f.mul(c, x));
            }
        }
        Ok(out)
    }

    pub fn reduces_to_zero(&self, el: &AlgebraElement<F::Elem>) -> Result<bool> {
        Ok(self.normal_form(el)?.is_zero())
    }

    /// Product in the quotient, returned in normal form.
    pub fn multiply(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> Result<AlgebraElement<F::Elem>> {
        self.normal_form(&a.multiply(&self.field, b))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn generators(&self) -> &IdealGenerators<F::Elem> {
        &self.generators
    }

    /// True once a vanishing degree was reached (so every higher degree vanishes).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Highest degree with computed data.
    pub fn built_degree(&self) -> usize {
        self.levels.len() - 1
    }

    /// First degree whose component vanishes, when reached.
    pub fn nilpotency_degree(&self) -> Option<usize> {
        self.complete.then(|| self.built_degree())
    }

    pub fn dimension(&self, d: usize) -> Result<usize> {
        if d == 0 {
            return Ok(self.quiver.vertex_count() as usize);
        }
        match self.levels.get(d) {
            Some(l) => Ok(l.values().map(|b| b.standard.len()).sum()),
            None if self.complete => Ok(0),
            None => Err(Error::Truncated { built: self.built_degree(), requested: d }),
        }
    }

    /// dims[d] for d = 0 ..= built degree (ending in 0 when complete).
    pub fn graded_dims(&self) -> Vec<usize> {
        (0..=self.built_degree()).map(|d| self.dimension(d).expect("built")).collect()
    }

    /// Σ_d dim(d) over the computed range.
    pub fn total_dimension(&self) -> u128 {
        self.graded_dims().iter().map(|&x| x as u128).sum()
    }

    pub fn block_dimension(&self, d: usize, target: u32, source: u32) -> Result<usize> {
        if d > self.built_degree() && !self.complete {
            return Err(Error::Truncated { built: self.built_degree(), requested: d });
        }
        Ok(self.standard_in(d, (target, source)).len())
    }

    /// dim of the (u → v) block of rad/rad², i.e. degree-one standard paths.
    pub fn radical_layer_dimension(&self, source: u32, target: u32) -> Result<usize> {
        self.block_dimension(1, target, source)
    }

    /// Standard paths of degree d, ordered by block then path.
    pub fn standard_paths(&self, d: usize) -> Vec<Path> {
        if d == 0 {
            return (0..self.quiver.vertex_count()).map(Path::trivial).collect();
        }
        match self.levels.get(d) {
            Some(l) => l.values().flat_map(|b| b.standard.iter().map(|&c| b.columns[c].clone())).collect(),
            None => Vec::new(),
        }
    }

    /// All standard paths: a basis of the quotient over the computed range.
    pub fn basis(&self) -> Vec<Path> {
        (0..=self.built_degree()).flat_map(|d| self.standard_paths(d)).collect()
    }

    /// (degree, target, source, dimension) for every nonzero block.
    pub fn block_table(&self) -> Vec<(usize, u32, u32, usize)> {
        let mut out: Vec<_> = (0..self.quiver.vertex_count()).map(|v| (0, v, v, 1)).collect();
        for (d, level) in self.levels.iter().enumerate().skip(1) {
            for (&(t, s), b) in level {
                if !b.standard.is_empty() {
                    out.push((d, t, s, b.standard.len()));
                }
            }
        }
        out
    }
}

/// A quiver with relations, e.g. a free algebra on loops modulo words.
#[derive(Clone, Debug)]
pub struct Presentation<E> {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<AlgebraElement<E>>,
}

/// Graded and total dimension of a presented algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PresentationDimension {
    pub graded: Vec<usize>,
    pub total: u128,
    /// false when the degree cap was hit before a vanishing degree
    pub complete: bool,
}

/// The path of a word in the loops of a one-vertex quiver; `letters[0]` is the leftmost factor.
pub fn loop_word(letters: &[u32]) -> Path {
    Path { target: 0, source: 0, arrows: letters.to_vec() }
}

impl<E: Clone> Presentation<E> {
    pub fn new(name: impl Into<String>, quiver: Quiver, relations: Vec<AlgebraElement<E>>) -> Self {
        Self { name: name.into(), quiver, relations }
    }

    /// Splits relations by endpoints (e_u·r·e_v lies in the ideal) and rejects
    /// mixed degrees.
    pub fn generators(&self) -> Result<IdealGenerators<E>> {
        let mut generators = Vec::new();
        for (index, r) in self.relations.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let Some(degree) = r.degree() else {
                return Err(Error::NonHomogeneous { index, reason: "terms of different lengths".into() });
            };
            if degree == 0 {
                return Err(Error::NonHomogeneous { index, reason: "relation of degree 0".into() });
            }
            for ((target, source, _), element) in r.components() {
                generators.push(Generator { family: Family::Custom { index }, target, source, degree, element });
            }
        }
        Ok(IdealGenerators { generators })
    }

    pub fn quotient<F: Field<Elem = E>>(&self, field: &F, max_degree: usize) -> Result<GradedQuotient<F>> {
        GradedQuotient::build(field, &self.quiver, self.generators()?, BuildOptions::up_to(max_degree))
    }

    pub fn dimension<F: Field<Elem = E>>(&self, field: &F, max_degree: usize) -> Result<PresentationDimension> {
        let q = self.quotient(field, max_degree)?;
        Ok(PresentationDimension { graded: q.graded_dims(), total: q.total_dimension(), complete: q.is_complete() })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Nilpotent { dir } => write!(f, "nilpotent[{}]", dir + 1),
            Family::CommutingSquare { i, j } => write!(f, "commuting[{},{}]", i + 1, j + 1),
            Family::Serre { i, j } => write!(f, "serre[{},{}]", i + 1, j + 1),
            Family::RootVectorPower { i, j } => write!(f, "root-vector-power[{},{}]", i + 1, j + 1),
            Family::Custom { index } => write!(f, "relation[{index}]"),
        }
    }
}
