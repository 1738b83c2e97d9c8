//! Comultiplication and counit on the path algebra of a Cayley quiver, the
//! crossed tensor square with its q-commuting mixed squares, and the flip φ.
//!
//! Δ on a vertex or an arrow is given by closed formulas; on longer paths it is
//! the product of the arrow coproducts in the plain tensor product k^Q ⊗ k^Q.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{AlgebraElement, Family, GradedQuotient, LinComb};
use crate::cartan::CartanMatrix;
use crate::cyclotomic::{nilpotency_order, Field};
use crate::error::{Error, Result};
use crate::quiver::{GroupElement, Path, Quiver};

/// Basis pairs (p, p′) with scalar coefficients.
pub type TensorElement<E> = LinComb<(Path, Path), E>;
pub type TripleTensor<E> = LinComb<(Path, Path, Path), E>;

/// Plain tensor product multiplication: legwise concatenation.
pub fn tensor_multiply<F: Field>(field: &F, a: &TensorElement<F::Elem>, b: &TensorElement<F::Elem>) -> TensorElement<F::Elem> {
    multiply_with(field, a, b, |_, _| None)
}

/// `extra(p′, r)` returns an optional factor for moving the second leg of the
/// left factor past the first leg of the right factor.
fn multiply_with<F: Field>(
    field: &F,
    a: &TensorElement<F::Elem>,
    b: &TensorElement<F::Elem>,
    extra: impl Fn(&Path, &Path) -> Option<F::Elem>,
) -> TensorElement<F::Elem> {
    let mut index: HashMap<(u32, u32), Vec<(&(Path, Path), &F::Elem)>> = HashMap::new();
    for (k, c) in b.iter() {
        index.entry((k.0.target, k.1.target)).or_default().push((k, c));
    }
    let mut out = TensorElement::zero();
    for ((p, p2), c) in a.iter() {
        let Some(matches) = index.get(&(p.source, p2.source)) else { continue };
        for ((r, r2), d) in matches {
            let left = p.compose(r).expect("matched endpoints");
            let right = p2.compose(r2).expect("matched endpoints");
            let mut coeff = field.mul(c, d);
            if let Some(x) = extra(p2, r) {
                coeff = field.mul(&coeff, &x);
            }
            out.add_term(field, (left, right), coeff);
        }
    }
    out
}

/// Swaps the two legs.
pub fn flip<E: Clone>(a: &TensorElement<E>) -> TensorElement<E> {
    a.map_keys_injective(|(p, r)| (r.clone(), p.clone()))
}

/// Deliberate damage to Δ, for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    /// drop the q^{x_i} factor on this arrow only
    Arrow(u32),
    /// drop it everywhere (still coassociative, but no longer preserves J)
    AllArrows,
}

/// Comultiplication data for one Cayley quiver.
#[derive(Clone, Debug)]
pub struct Coproduct<F: Field> {
    field: F,
    quiver: Quiver,
    n: u32,
    t: usize,
    /// paths longer than this are rejected
    pub degree_cap: usize,
    perturbed: Option<Perturbation>,
}

/// Outcome of a coassociativity comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoassociativityReport {
    pub holds: bool,
    /// first basis triple whose coefficients differ, rendered
    pub witness: Option<String>,
    pub terms: usize,
}

/// Verdict of Δ(g) ≡ 0 in the quotient tensor square for one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealCheck {
    pub family: String,
    pub target: u32,
    pub delta_terms: usize,
    pub vanishes: bool,
}

impl<F: Field> Coproduct<F> {
    pub fn new(field: &F, quiver: &Quiver) -> Result<Self> {
        let (n, t) = quiver.cayley_params().ok_or(Error::NotCayley)?;
        if field.order() != n {
            return Err(Error::Unsupported(format!("scalar field has q of order {}, quiver needs {n}", field.order())));
        }
        let e = nilpotency_order(n) as usize;
        Ok(Self { field: field.clone(), quiver: quiver.clone(), n, t, degree_cap: 2 * e, perturbed: None })
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    /// A deliberately wrong Δ.
    pub fn perturbed(mut self, how: Perturbation) -> Self {
        self.perturbed = Some(how);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn group(&self) -> Vec<GroupElement> {
        (0..self.quiver.vertex_count()).map(|v| self.quiver.element(v).expect("cayley")).collect()
    }

    fn delta_vertex(&self, c: u32) -> TensorElement<F::Elem> {
        let f = &self.field;
        let cg = self.quiver.element(c).expect("cayley");
        let mut out = TensorElement::zero();
        for x in self.group() {
            let y = cg.sub(&x, self.n);
            let (xv, yv) = (self.quiver.vertex_of(&x).unwrap(), self.quiver.vertex_of(&y).unwrap());
            out.add_term(f, (Path::trivial(xv), Path::trivial(yv)), f.one());
        }
        out
    }

    fn delta_arrow(&self, arrow: u32) -> TensorElement<F::Elem> {
        let f = &self.field;
        let a = self.quiver.arrow(arrow);
        let i = a.label as usize;
        let cg = self.quiver.element(a.target).expect("cayley");
        let arrow_path = |target: u32| {
            let id = self.quiver.cayley_arrow(target, i).expect("direction in range");
            Path { target, source: self.quiver.arrow(id).source, arrows: vec![id] }
        };
        let mut out = TensorElement::zero();
        for x in self.group() {
            let y = cg.sub(&x, self.n);
            let (xv, yv) = (self.quiver.vertex_of(&x).unwrap(), self.quiver.vertex_of(&y).unwrap());
            let dropped = match self.perturbed {
                Some(Perturbation::Arrow(a)) => a == arrow,
                Some(Perturbation::AllArrows) => true,
                None => false,
            };
            let coeff = if dropped { f.one() } else { f.q_power(x.0[i] as i64) };
            out.add_term(f, (Path::trivial(xv), arrow_path(yv)), coeff);
            out.add_term(f, (arrow_path(xv), Path::trivial(yv)), f.one());
        }
        out
    }

    /// Δ of a single path mass.
    pub fn delta_path(&self, p: &Path) -> Result<TensorElement<F::Elem>> {
        if p.len() > self.degree_cap {
            return Err(Error::DegreeCap { degree: p.len(), cap: self.degree_cap });
        }
        if p.is_trivial() {
            return Ok(self.delta_vertex(p.target));
        }
        let mut acc = self.delta_arrow(p.arrows[0]);
        for &a in &p.arrows[1..] {
            acc = tensor_multiply(&self.field, &acc, &self.delta_arrow(a));
        }
        Ok(acc)
    }

    pub fn delta(&self, a: &AlgebraElement<F::Elem>) -> Result<TensorElement<F::Elem>> {
        let f = &self.field;
        let mut out = TensorElement::zero();
        for (p, c) in a.iter() {
            for (k, x) in self.delta_path(p)?.iter() {
                out.add_term(f, k.clone(), f.mul(c, x));
            }
        }
        Ok(out)
    }

    /// ε(δ_{K^0}) = 1; every other vertex and every positive-length path maps to 0.
    pub fn counit(&self, a: &AlgebraElement<F::Elem>) -> F::Elem {
        let zero = self.quiver.vertex_of(&GroupElement::zero(self.t)).expect("cayley");
        a.coefficient(&Path::trivial(zero)).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// (ε⊗id)Δ(a) = a = (id⊗ε)Δ(a).
    pub fn check_counit(&self, a: &AlgebraElement<F::Elem>) -> Result<bool> {
        let f = &self.field;
        let d = self.delta(a)?;
        let mut left = AlgebraElement::zero();
        let mut right = AlgebraElement::zero();
        for ((p, r), c) in d.iter() {
            let el = |x: &Path| self.counit(&AlgebraElement::path(f, x.clone()));
            left.add_term(f, r.clone(), f.mul(c, &el(p)));
            right.add_term(f, p.clone(), f.mul(c, &el(r)));
        }
        Ok(left == *a && right == *a)
    }

    /// Compares (Δ⊗id)Δ(a) with (id⊗Δ)Δ(a).
    pub fn check_coassociativity(&self, a: &AlgebraElement<F::Elem>) -> Result<CoassociativityReport> {
        let f = &self.field;
        let d = self.delta(a)?;
        let mut lhs = TripleTensor::zero();
        let mut rhs = TripleTensor::zero();
        for ((p, r), c) in d.iter() {
            for ((x, y), k) in self.delta_path(p)?.iter() {
                lhs.add_term(f, (x.clone(), y.clone(), r.clone()), f.mul(c, k));
            }
            for ((x, y), k) in self.delta_path(r)?.iter() {
                rhs.add_term(f, (p.clone(), x.clone(), y.clone()), f.mul(c, k));
            }
        }
        let diff = lhs.sub(f, &rhs);
        let witness = diff.iter().next().map(|((x, y, z), _)| {
            let show = |k: &(Path, Path, Path)| lhs.coefficient(k).map(|v| f.render(v)).unwrap_or_else(|| "0".into());
            let key = (x.clone(), y.clone(), z.clone());
            let other = rhs.coefficient(&key).map(|v| f.render(v)).unwrap_or_else(|| "0".into());
            format!("{:?} ⊗ {:?} ⊗ {:?}: left {} vs right {}", self.quiver.word(x), self.quiver.word(y), self.quiver.word(z), show(&key), other)
        });
        Ok(CoassociativityReport { holds: diff.is_zero(), witness, terms: lhs.len() })
    }

    /// nf ⊗ nf: zero exactly when the element lies in J⊗A + A⊗J.
    pub fn reduce_legs(
        &self,
        quotient: &GradedQuotient<F>,
        a: &TensorElement<F::Elem>,
        cache: &mut HashMap<Path, AlgebraElement<F::Elem>>,
    ) -> Result<TensorElement<F::Elem>> {
        let f = &self.field;
        let mut nf = |p: &Path| -> Result<AlgebraElement<F::Elem>> {
            if let Some(x) = cache.get(p) {
                return Ok(x.clone());
            }
            let x = quotient.normal_form(&AlgebraElement::path(f, p.clone()))?;
            cache.insert(p.clone(), x.clone());
            Ok(x)
        };
        let mut out = TensorElement::zero();
        for ((p, r), c) in a.iter() {
            let np = nf(p)?;
            if np.is_zero() {
                continue;
            }
            let nr = nf(r)?;
            for (x, cx) in np.iter() {
                for (y, cy) in nr.iter() {
                    out.add_term(f, (x.clone(), y.clone()), f.mul(c, &f.mul(cx, cy)));
                }
            }
        }
        Ok(out)
    }

    /// Δ(g) reduced on both legs, for every generator of the quotient's ideal.
    pub fn delta_respects_ideal(&self, quotient: &GradedQuotient<F>) -> Result<Vec<IdealCheck>> {
        let mut cache = HashMap::new();
        let mut out = Vec::new();
        for g in &quotient.generators().generators {
            if matches!(g.family, Family::Custom { .. }) {
                continue;
            }
            let d = self.delta(&g.element)?;
            let reduced = self.reduce_legs(quotient, &d, &mut cache)?;
            out.push(IdealCheck { family: g.family.to_string(), target: g.target, delta_terms: d.len(), vanishes: reduced.is_zero() });
        }
        Ok(out)
    }
}

/// The crossed tensor square: (x⊗1)(1⊗y) = x⊗y, while moving a second-leg
/// arrow of direction j past a first-leg arrow of direction i costs q^{-a_ij}.
#[derive(Clone, Debug)]
pub struct CrossedProduct<F: Field> {
    field: F,
    quiver: Quiver,
    cartan: CartanMatrix,
    n: u32,
}

/// Aggregate verdict of a family of identity checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }

    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn new() -> Self {
        Self::default()
    }
}

impl<F: Field> CrossedProduct<F> {
    pub fn new(field: &F, quiver: &Quiver) -> Result<Self> {
        let (n, _) = quiver.cayley_params().ok_or(Error::NotCayley)?;
        let cartan = quiver.cartan().ok_or(Error::NotCayley)?.clone();
        Ok(Self { field: field.clone(), quiver: quiver.clone(), cartan, n })
    }

    fn exchange(&self, second_leg: &Path, first_leg: &Path) -> Option<F::Elem> {
        if second_leg.is_trivial() || first_leg.is_trivial() {
            return None;
        }
        let mut exp = 0i64;
        for &b in &second_leg.arrows {
            let j = self.quiver.arrow(b).label as usize;
            for &a in &first_leg.arrows {
                let i = self.quiver.arrow(a).label as usize;
                exp -= self.cartan.entry(i, j);
            }
        }
        Some(self.field.q_power(exp))
    }

    pub fn multiply(&self, a: &TensorElement<F::Elem>, b: &TensorElement<F::Elem>) -> TensorElement<F::Elem> {
        multiply_with(&self.field, a, b, |p2, r| self.exchange(p2, r))
    }

    fn pair(&self, p: Path, r: Path) -> TensorElement<F::Elem> {
        TensorElement::basis(&self.field, (p, r))
    }

    fn arrow_path(&self, target: u32, dir: usize) -> Path {
        self.quiver.cayley_path(target, &[dir]).expect("cayley")
    }

    /// q^{a_ij}(K^c, α(K^d,j))(α(K^c,i), K^{d-a_j}) = (α(K^c,i), K^d)(K^{c-a_i}, α(K^d,j))
    /// for every c, d, i, j.
    pub fn verify_exchange_relation(&self) -> IdentityCheck {
        let f = &self.field;
        let t = self.cartan.size();
        let mut check = IdentityCheck::new();
        for c in 0..self.quiver.vertex_count() {
            for d in 0..self.quiver.vertex_count() {
                for i in 0..t {
                    for j in 0..t {
                        let ai = self.arrow_path(c, i);
                        let bj = self.arrow_path(d, j);
                        let lhs = self
                            .multiply(&self.pair(Path::trivial(c), bj.clone()), &self.pair(ai.clone(), Path::trivial(bj.source)))
                            .scale(f, &f.q_power(self.cartan.entry(i, j)));
                        let rhs = self.multiply(&self.pair(ai.clone(), Path::trivial(d)), &self.pair(Path::trivial(ai.source), bj.clone()));
                        check.record(lhs == rhs && !lhs.is_zero(), || format!("c={c} d={d} i={} j={}", i + 1, j + 1));
                    }
                }
            }
        }
        check
    }

    fn x_of(&self, v: u32) -> GroupElement {
        self.quiver.element(v).expect("cayley")
    }

    /// φ on a basis pair, extended multiplicatively from degrees 0 and 1 through
    /// (p, p′) = (p, t(p′))·(s(p), p′) and arrow-by-arrow factorizations.
    pub fn phi_pair(&self, p: &Path, r: &Path) -> TensorElement<F::Elem> {
        let f = &self.field;
        let single = |a: u32| {
            let arr = self.quiver.arrow(a);
            (Path { target: arr.target, source: arr.source, arrows: vec![a] }, arr.label as usize)
        };
        let product =
            |factors: Vec<TensorElement<F::Elem>>, empty: TensorElement<F::Elem>| factors.into_iter().reduce(|acc, x| self.multiply(&acc, &x)).unwrap_or(empty);
        // φ(α(K^x,i), K^y) = q^{y_i}(K^y, α(K^x,i)), applied to (p, t(p′))
        let v = r.target;
        let y = self.x_of(v);
        let left = product(
            p.arrows
                .iter()
                .map(|&a| {
                    let (alpha, i) = single(a);
                    self.pair(Path::trivial(v), alpha).scale(f, &f.q_power(y.0[i] as i64))
                })
                .collect(),
            self.pair(Path::trivial(v), Path::trivial(p.target)),
        );
        // φ(K^x, α(K^y,i)) = q^{-x_i}(α(K^y,i), K^x), applied to (s(p), p′)
        let u = p.source;
        let x = self.x_of(u);
        let right = product(
            r.arrows
                .iter()
                .map(|&a| {
                    let (beta, i) = single(a);
                    self.pair(beta, Path::trivial(u)).scale(f, &f.q_power(-(x.0[i] as i64)))
                })
                .collect(),
            self.pair(Path::trivial(r.target), Path::trivial(u)),
        );
        self.multiply(&left, &right)
    }

    pub fn phi(&self, a: &TensorElement<F::Elem>) -> TensorElement<F::Elem> {
        a.map_linear(&self.field, |(p, r)| self.phi_pair(p, r))
    }

    /// Basis pairs of total degree ≤ 1.
    pub fn low_degree_basis(&self) -> Vec<(Path, Path)> {
        let v = self.quiver.vertex_count();
        let arrows: Vec<Path> =
            self.quiver.arrows().iter().enumerate().map(|(i, a)| Path { target: a.target, source: a.source, arrows: vec![i as u32] }).collect();
        let mut out = Vec::new();
        for x in 0..v {
            for y in 0..v {
                out.push((Path::trivial(x), Path::trivial(y)));
            }
            for a in &arrows {
                out.push((Path::trivial(x), a.clone()));
                out.push((a.clone(), Path::trivial(x)));
            }
        }
        out
    }

    /// φ(ab) = φ(a)φ(b) for all composable degree-≤1 basis pairs a, b.
    pub fn check_phi_multiplicative(&self) -> IdentityCheck {
        let basis = self.low_degree_basis();
        let mut by_targets: HashMap<(u32, u32), Vec<&(Path, Path)>> = HashMap::new();
        for k in &basis {
            by_targets.entry((k.0.target, k.1.target)).or_default().push(k);
        }
        let mut check = IdentityCheck::new();
        for a in &basis {
            let Some(bs) = by_targets.get(&(a.0.source, a.1.source)) else { continue };
            let ea = self.pair(a.0.clone(), a.1.clone());
            let pa = self.phi(&ea);
            for b in bs {
                let eb = self.pair(b.0.clone(), b.1.clone());
                let lhs = self.phi(&self.multiply(&ea, &eb));
                let rhs = self.multiply(&pa, &self.phi(&eb));
                check.record(lhs == rhs, || {
                    format!("{:?} · {:?}", (self.quiver.word(&a.0), self.quiver.word(&a.1)), (self.quiver.word(&b.0), self.quiver.word(&b.1)))
                });
            }
        }
        check
    }

    /// φ² = id on degree-≤1 basis pairs.
    pub fn check_phi_involution(&self) -> IdentityCheck {
        let mut check = IdentityCheck::new();
        for (p, r) in self.low_degree_basis() {
            let e = self.pair(p.clone(), r.clone());
            check.record(self.phi(&self.phi(&e)) == e, || format!("({:?}, {:?}) at ({}, {})", self.quiver.word(&p), self.quiver.word(&r), p.target, r.target));
        }
        check
    }

    /// φ² = id on basis pairs of total degree exactly `d` (informational beyond 1).
    pub fn check_phi_involution_degree(&self, d: usize) -> IdentityCheck {
        let mut check = IdentityCheck::new();
        let paths = |len: usize| -> Vec<Path> {
            let mut cur: Vec<Path> = (0..self.quiver.vertex_count()).map(Path::trivial).collect();
            for _ in 0..len {
                cur = cur
                    .iter()
                    .flat_map(|p| {
                        self.quiver.outgoing(p.target).iter().map(move |&a| {
                            let arr = self.quiver.arrow(a);
                            Path { target: arr.target, source: arr.source, arrows: vec![a] }.compose(p).unwrap()
                        })
                    })
                    .collect();
            }
            cur
        };
        for k in 0..=d {
            for p in paths(k) {
                for r in paths(d - k) {
                    let e = self.pair(p.clone(), r.clone());
                    check.record(self.phi(&self.phi(&e)) == e, || format!("({:?}, {:?})", self.quiver.word(&p), self.quiver.word(&r)));
                }
            }
        }
        check
    }

    /// φΔ(g) against Δ^op(g), and against Δ(g), for the given elements.
    pub fn check_phi_delta(&self, delta: &Coproduct<F>, elements: &[(String, AlgebraElement<F::Elem>)]) -> Result<(IdentityCheck, IdentityCheck)> {
        let mut vs_op = IdentityCheck::new();
        let mut vs_delta = IdentityCheck::new();
        for (name, g) in elements {
            let d = delta.delta(g)?;
            let pd = self.phi(&d);
            vs_op.record(pd == flip(&d), || name.clone());
            vs_delta.record(pd == d, || name.clone());
        }
        Ok((vs_op, vs_delta))
    }

    pub fn order(&self) -> u32 {
        self.n
    }
}
