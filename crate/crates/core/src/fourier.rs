//! The Fourier transform between functions on G = (Z/nZ)^t and the group
//! algebra kG, and its extension χ_q / Ψ between the K/E presentation and the
//! path algebra of the Cayley quiver.
//!
//! Presentation elements are combinations of K^m·E_w, with every K pushed to
//! the left through E_j K_i = q^{-a_ij} K_i E_j. E-words are free: no type-II
//! relation is applied on this side.

use serde::Serialize;

use crate::algebra::{AlgebraElement, Family, IdealGenerators, LinComb};
use crate::cartan::CartanMatrix;
use crate::cyclotomic::{nilpotency_order, Field};
use crate::error::{Error, Result};
use crate::hopf::IdentityCheck;
use crate::quiver::{GroupElement, Path, Quiver};

/// Key K^m·E_{w}; `w[0]` is the leftmost E.
pub type Monomial = (GroupElement, Vec<u32>);
pub type PresentationElement<E> = LinComb<Monomial, E>;

#[derive(Clone, Debug)]
pub struct Fourier<F: Field> {
    field: F,
    quiver: Quiver,
    cartan: CartanMatrix,
    n: u32,
    t: usize,
    inv_order: F::Elem,
}

/// Verdicts of the round trip χ_q ∘ Ψ and Ψ ∘ χ_q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    /// Ψ(χ_q(b)) = b for vertex and arrow masses b
    pub path_side: IdentityCheck,
    /// χ_q(Ψ(g)) = g for g ∈ {K_i, E_i}
    pub presentation_side: IdentityCheck,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.path_side.holds() && self.presentation_side.holds()
    }
}

impl<F: Field> Fourier<F> {
    /// Requires |G| = n^t invertible in the scalar field.
    pub fn new(field: &F, quiver: &Quiver) -> Result<Self> {
        let (n, t) = quiver.cayley_params().ok_or(Error::NotCayley)?;
        let cartan = quiver.cartan().ok_or(Error::NotCayley)?.clone();
        let order = quiver.vertex_count() as u128;
        let as_elem = field.from_int(order as i64);
        let inv_order = field.inv(&as_elem).map_err(|_| Error::GroupOrderNotInvertible { order, p: field.backend().prime.unwrap_or(0) })?;
        Ok(Self { field: field.clone(), quiver: quiver.clone(), cartan, n, t, inv_order })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    fn group(&self) -> impl Iterator<Item = (u32, GroupElement)> + '_ {
        (0..self.quiver.vertex_count()).map(|v| (v, self.quiver.element(v).expect("cayley")))
    }

    pub fn monomial(&self, k: GroupElement, word: Vec<u32>) -> PresentationElement<F::Elem> {
        PresentationElement::basis(&self.field, (k, word))
    }

    pub fn identity(&self) -> PresentationElement<F::Elem> {
        self.monomial(GroupElement::zero(self.t), Vec::new())
    }

    pub fn k_generator(&self, i: usize) -> PresentationElement<F::Elem> {
        let mut m = GroupElement::zero(self.t);
        m.0[i] = 1 % self.n;
        self.monomial(m, Vec::new())
    }

    pub fn e_generator(&self, i: usize) -> PresentationElement<F::Elem> {
        self.monomial(GroupElement::zero(self.t), vec![i as u32])
    }

    /// E_w as a presentation element (K-part trivial).
    pub fn e_word(&self, w: &[u32]) -> PresentationElement<F::Elem> {
        self.monomial(GroupElement::zero(self.t), w.to_vec())
    }

    /// (K^m E_w)(K^{m'} E_{w'}) = q^{-Σ_{j∈w} (C m')_j} K^{m+m'} E_{w w'}.
    pub fn multiply(&self, a: &PresentationElement<F::Elem>, b: &PresentationElement<F::Elem>) -> PresentationElement<F::Elem> {
        let f = &self.field;
        let mut out = PresentationElement::zero();
        for ((m, w), c) in a.iter() {
            for ((m2, w2), d) in b.iter() {
                let mut exp = 0i64;
                for &j in w {
                    for i in 0..self.t {
                        exp -= self.cartan.entry(i, j as usize) * m2.0[i] as i64;
                    }
                }
                let mut word = w.clone();
                word.extend_from_slice(w2);
                out.add_term(f, (m.add(m2, self.n), word), f.mul(&f.mul(c, d), &f.q_power(exp)));
            }
        }
        out
    }

    /// χ(δ_{K^c}) = |G|^{-1} Σ_x q^{-c·x} K^x, on degree-zero elements.
    pub fn chi(&self, a: &AlgebraElement<F::Elem>) -> Result<PresentationElement<F::Elem>> {
        let f = &self.field;
        let mut out = PresentationElement::zero();
        for (p, coeff) in a.iter() {
            if !p.is_trivial() {
                return Err(Error::NotDegreeZero);
            }
            let cg = self.quiver.element(p.target)?;
            let scale = f.mul(coeff, &self.inv_order);
            for (_, x) in self.group() {
                let e = -(cg.pairing(&x, self.n) as i64);
                out.add_term(f, (x, Vec::new()), f.mul(&scale, &f.q_power(e)));
            }
        }
        Ok(out)
    }

    /// χ^{-1}(K^a) = Σ_x q^{a·x} δ_{K^x}, on elements without E-part.
    pub fn chi_inverse(&self, a: &PresentationElement<F::Elem>) -> Result<AlgebraElement<F::Elem>> {
        let f = &self.field;
        let mut out = AlgebraElement::zero();
        for ((m, w), coeff) in a.iter() {
            if !w.is_empty() {
                return Err(Error::NotDegreeZero);
            }
            for (v, x) in self.group() {
                out.add_term(f, Path::trivial(v), f.mul(coeff, &f.q_power(m.pairing(&x, self.n) as i64)));
            }
        }
        Ok(out)
    }

    /// χ_q on paths: χ(δ_{K^c}) on vertices, χ(δ_{K^c})·E_i on the arrow A(K^c, i),
    /// multiplicative along longer paths.
    pub fn chi_q(&self, a: &AlgebraElement<F::Elem>) -> Result<PresentationElement<F::Elem>> {
        let f = &self.field;
        let mut out = PresentationElement::zero();
        for (p, coeff) in a.iter() {
            let image = if p.is_trivial() {
                self.chi(&AlgebraElement::path(f, p.clone()))?
            } else {
                let mut acc: Option<PresentationElement<F::Elem>> = None;
                for &arrow in &p.arrows {
                    let ar = self.quiver.arrow(arrow);
                    let deg1 = self.multiply(&self.chi(&AlgebraElement::vertex(f, ar.target))?, &self.e_generator(ar.label as usize));
                    acc = Some(match acc {
                        None => deg1,
                        Some(prev) => self.multiply(&prev, &deg1),
                    });
                }
                acc.expect("nonempty path")
            };
            out = out.add(f, &image.scale(f, coeff));
        }
        Ok(out)
    }

    /// Ψ(K^m E_w) = Σ_x q^{m·x} δ_{A(K^x, w)}.
    pub fn psi(&self, a: &PresentationElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let f = &self.field;
        let mut out = AlgebraElement::zero();
        for ((m, w), coeff) in a.iter() {
            let dirs: Vec<usize> = w.iter().map(|&i| i as usize).collect();
            for (v, x) in self.group() {
                let p = self.quiver.cayley_path(v, &dirs).expect("directions in range");
                out.add_term(f, p, f.mul(coeff, &f.q_power(m.pairing(&x, self.n) as i64)));
            }
        }
        out
    }

    /// Ψ(χ_q(b)) = b on all vertex and arrow masses; χ_q(Ψ(g)) = g on generators.
    pub fn verify_iso_roundtrip(&self) -> Result<RoundTrip> {
        let f = &self.field;
        let mut path_side = IdentityCheck::default();
        let mut basis: Vec<Path> = (0..self.quiver.vertex_count()).map(Path::trivial).collect();
        basis.extend(self.quiver.arrows().iter().enumerate().map(|(i, a)| Path { target: a.target, source: a.source, arrows: vec![i as u32] }));
        for b in basis {
            let el = AlgebraElement::path(f, b.clone());
            let back = self.psi(&self.chi_q(&el)?);
            path_side.record(back == el, || format!("{:?} at {}", self.quiver.word(&b), b.target));
        }
        let mut presentation_side = IdentityCheck::default();
        for i in 0..self.t {
            for (name, g) in [("K", self.k_generator(i)), ("E", self.e_generator(i))] {
                let back = self.chi_q(&self.psi(&g))?;
                presentation_side.record(back == g, || format!("{name}{}", i + 1));
            }
        }
        Ok(RoundTrip { path_side, presentation_side })
    }

    /// χ(δ_c)·χ_q(δ_{A(c,i)})·χ(δ_{c-a_i}) = χ_q(δ_{A(c,i)}) for all c, i.
    pub fn verify_compatibility(&self) -> Result<IdentityCheck> {
        let f = &self.field;
        let mut check = IdentityCheck::default();
        for (id, a) in self.quiver.arrows().iter().enumerate() {
            let arrow = AlgebraElement::path(f, Path { target: a.target, source: a.source, arrows: vec![id as u32] });
            let img = self.chi_q(&arrow)?;
            let lhs = self.multiply(&self.multiply(&self.chi(&AlgebraElement::vertex(f, a.target))?, &img), &self.chi(&AlgebraElement::vertex(f, a.source))?);
            check.record(lhs == img, || format!("arrow {id}"));
        }
        Ok(check)
    }

    /// χ(δ_c δ_d) = χ(δ_c) χ(δ_d) for all vertex pairs.
    pub fn verify_chi_multiplicative(&self) -> Result<IdentityCheck> {
        let f = &self.field;
        let mut check = IdentityCheck::default();
        let v = self.quiver.vertex_count();
        let images: Vec<_> = (0..v).map(|c| self.chi(&AlgebraElement::vertex(f, c))).collect::<Result<_>>()?;
        for c in 0..v {
            for d in 0..v {
                let lhs = self.chi(&AlgebraElement::vertex(f, c).multiply(f, &AlgebraElement::vertex(f, d)))?;
                let rhs = self.multiply(&images[c as usize], &images[d as usize]);
                check.record(lhs == rhs, || format!("({c}, {d})"));
            }
        }
        Ok(check)
    }

    /// Ψ(K_i)Ψ(E_j)Ψ(K_i)^{-1} = q^{a_ij}Ψ(E_j) and Ψ(K_i)^n = 1.
    pub fn verify_type_one(&self) -> IdentityCheck {
        let f = &self.field;
        let mut check = IdentityCheck::default();
        let one = self.psi(&self.identity());
        for i in 0..self.t {
            let k = self.psi(&self.k_generator(i));
            let mut kinv_m = GroupElement::zero(self.t);
            kinv_m.0[i] = (self.n - 1) % self.n;
            let kinv = self.psi(&self.monomial(kinv_m, Vec::new()));
            check.record(k.multiply(f, &kinv) == one, || format!("K{} inverse", i + 1));
            let mut power = one.clone();
            for _ in 0..self.n {
                power = power.multiply(f, &k);
            }
            check.record(power == one, || format!("K{}^n", i + 1));
            for j in 0..self.t {
                let e = self.psi(&self.e_generator(j));
                let lhs = k.multiply(f, &e).multiply(f, &kinv);
                let rhs = e.scale(f, &f.q_power(self.cartan.entry(i, j)));
                check.record(lhs == rhs, || format!("K{} E{} K{}^-1", i + 1, j + 1, i + 1));
            }
        }
        check
    }

    /// The type-II relations of u_q^+ as presentation elements, labelled by family.
    pub fn type_two_relations(&self) -> Vec<(Family, PresentationElement<F::Elem>)> {
        let f = &self.field;
        let e = nilpotency_order(self.n) as usize;
        let mut out = Vec::new();
        for i in 0..self.t {
            out.push((Family::Nilpotent { dir: i }, self.e_word(&vec![i as u32; e])));
        }
        let serre = f.neg(&f.add(&f.q(), &f.q_power(-1)));
        for i in 0..self.t {
            for j in 0..self.t {
                let (iu, ju) = (i as u32, j as u32);
                match self.cartan.entry(i, j) {
                    0 if i < j => out.push((Family::CommutingSquare { i, j }, self.e_word(&[iu, ju]).sub(f, &self.e_word(&[ju, iu])))),
                    -1 => out.push((
                        Family::Serre { i, j },
                        self.e_word(&[iu, iu, ju]).add(f, &self.e_word(&[iu, ju, iu]).scale(f, &serre)).add(f, &self.e_word(&[ju, iu, iu])),
                    )),
                    _ => {}
                }
            }
        }
        out
    }

    /// Ψ of each type-II relation equals the sum over target vertices of the
    /// matching family of J-generators.
    pub fn verify_type_two_transport(&self, gens: &IdealGenerators<F::Elem>) -> IdentityCheck {
        let f = &self.field;
        let mut check = IdentityCheck::default();
        for (family, rel) in self.type_two_relations() {
            let image = self.psi(&rel);
            let mut sum = AlgebraElement::zero();
            let mut count = 0;
            for g in gens.generators.iter().filter(|g| g.family == family) {
                sum = sum.add(f, &g.element);
                count += 1;
            }
            check.record(count == self.quiver.vertex_count() as usize && image == sum, || family.to_string());
        }
        check
    }
}

impl Default for IdentityCheck {
    fn default() -> Self {
        Self { checked: 0, failures: 0, first_failure: None }
    }
}
