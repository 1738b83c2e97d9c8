use std::collections::BTreeMap;

use anyhow::Context;
use serde_json::{json, Value};
use uqpath_core::algebra::IdealGenerators;
use uqpath_core::cyclotomic::nilpotency_order;
use uqpath_core::fourier::Fourier;
use uqpath_core::hopf::{Coproduct, CrossedProduct};
use uqpath_core::reptype::{build_witness_chain, classify, complement_witness, Verdict};
use uqpath_core::{AlgebraElement, CyclotomicField, Error, Field, GradedQuotient, Path, PrimeField, Quiver};

use crate::report::{Check, Instance, Report};
use crate::{Backend, Command, RunConfig, Suite};

/// Exhaustive Ext¹ tables are limited to this many vertices.
const EXT_EXHAUSTIVE_VERTICES: u32 = 2048;

pub fn run(cfg: &RunConfig) -> anyhow::Result<Report<'_>> {
    match cfg.backend {
        Backend::Exact => run_with(cfg, CyclotomicField::new(cfg.n)?),
        Backend::Modular => run_with(cfg, PrimeField::new(cfg.n, cfg.prime_floor)?),
    }
}

struct Ctx<'a, F: Field> {
    cfg: &'a RunConfig,
    field: F,
    quiver: Quiver,
    results: Vec<Value>,
    checks: Vec<Check>,
}

fn run_with<F: Field>(cfg: &RunConfig, field: F) -> anyhow::Result<Report<'_>> {
    let quiver = Quiver::cayley(&cfg.cartan, cfg.n, cfg.vertex_budget)?;
    let scalars = field.backend();
    let mut ctx = Ctx { cfg, field, quiver, results: Vec::new(), checks: Vec::new() };
    match &cfg.command {
        Command::Quiver { emit_graph } => ctx.quiver_cmd(emit_graph.as_deref())?,
        Command::Dim => ctx.dim()?,
        Command::Graded => ctx.graded()?,
        Command::Blocks => ctx.blocks()?,
        Command::Ext => ctx.ext()?,
        Command::Classify => ctx.classify()?,
        Command::Verify { suite } => {
            let mut suites = suite.clone();
            suites.sort_by_key(|s| *s as u8);
            suites.dedup();
            for s in suites {
                ctx.verify(s)?;
            }
        }
        Command::Witness => ctx.witness()?,
    }
    let instance = Instance { name: cfg.cartan_type.clone(), cartan: cfg.cartan.rows(), n: cfg.n, t: cfg.cartan.size(), e: nilpotency_order(cfg.n), scalars };
    Ok(Report { config: cfg, instance, results: ctx.results, checks: ctx.checks })
}

fn trim_zeros(mut dims: Vec<usize>) -> Vec<usize> {
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

impl<F: Field> Ctx<'_, F> {
    fn quotient(&self) -> anyhow::Result<GradedQuotient<F>> {
        Ok(match self.cfg.max_degree {
            Some(d) => GradedQuotient::for_cayley_up_to(&self.field, &self.quiver, d)?,
            None => {
                let needed = self.cfg.cartan.pbw_dimension(self.cfg.n)?;
                let budget = self.cfg.dimension_budget;
                if needed > budget.into() {
                    let needed = u128::try_from(&needed).unwrap_or(u128::MAX);
                    return Err(Error::Budget { what: "quotient dimension (PBW)".into(), needed, budget }.into());
                }
                GradedQuotient::for_cayley(&self.field, &self.quiver)?
            }
        })
    }

    fn quotient_up_to(&self, d: usize) -> anyhow::Result<GradedQuotient<F>> {
        Ok(GradedQuotient::for_cayley_up_to(&self.field, &self.quiver, d)?)
    }

    fn provenance(&self) -> &'static str {
        match self.cfg.backend {
            Backend::Exact => "exact over Q(zeta_n)",
            Backend::Modular => "modular: equals the exact dimension under a specialization assumption on the prime",
        }
    }

    fn blocks_check(&mut self) -> usize {
        let components = self.quiver.connected_components().count;
        let coker = self.cfg.cartan.coker_cardinality(self.cfg.n);
        self.checks.push(Check::new("components = |coker C|", "block count equals the cardinality of coker C mod n", components as u64 == coker));
        components
    }

    fn quiver_cmd(&mut self, emit_graph: Option<&std::path::Path>) -> anyhow::Result<()> {
        let components = self.quiver.connected_components();
        let mut sizes: Vec<usize> = components.members().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        self.results.push(json!({
            "vertices": self.quiver.vertex_count(),
            "arrows": self.quiver.arrow_count(),
            "components": components.count,
            "component_sizes": sizes,
            "invariant_factors": self.cfg.cartan.smith_normal_form(),
            "coker_cardinality": self.cfg.cartan.coker_cardinality(self.cfg.n),
        }));
        self.blocks_check();
        if let Some(path) = emit_graph {
            let name = self.cfg.cartan_type.clone().unwrap_or_else(|| "cartan".into());
            std::fs::write(path, self.quiver.to_dot(&format!("{name}_n{}", self.cfg.n))).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }

    fn pbw(&self) -> anyhow::Result<Vec<usize>> {
        let series = self.cfg.cartan.pbw_series(self.cfg.n)?;
        series.iter().map(|c| usize::try_from(c).context("PBW coefficient overflows usize")).collect()
    }

    fn dim(&mut self) -> anyhow::Result<()> {
        let q = self.quotient()?;
        let pbw_total = self.cfg.cartan.pbw_dimension(self.cfg.n)?;
        self.results.push(json!({
            "total": q.total_dimension(),
            "graded": trim_zeros(q.graded_dims()),
            "complete": q.is_complete(),
            "built_degree": q.built_degree(),
            "nilpotency_degree": q.nilpotency_degree(),
            "pbw_total": pbw_total.to_string(),
            "provenance": self.provenance(),
        }));
        let holds = q.is_complete() && pbw_total == q.total_dimension().into();
        let mut check = Check::new("total dimension = n^t e^N", "PBW dimension of u_q^+", holds);
        if !q.is_complete() {
            check = check.detail(format!("quotient still nonzero at the degree cap {}", q.built_degree()));
        }
        self.checks.push(check);
        Ok(())
    }

    fn graded(&mut self) -> anyhow::Result<()> {
        let q = self.quotient()?;
        let pbw = self.pbw()?;
        let dims = q.graded_dims();
        let len = dims.len().max(pbw.len());
        let table: Vec<Value> = (0..len).map(|d| json!({"degree": d, "dimension": dims.get(d), "pbw": pbw.get(d).copied().unwrap_or(0)})).collect();
        let mismatch = (0..len).find(|&d| dims.get(d).copied().unwrap_or(0) != pbw.get(d).copied().unwrap_or(0));
        self.results.push(json!({"complete": q.is_complete(), "table": table, "provenance": self.provenance()}));
        let holds = q.is_complete() && mismatch.is_none();
        let mut check = Check::new("graded dimensions = PBW series", "PBW generating function", holds);
        if let Some(d) = mismatch {
            check = check.detail(format!("degree {d}: {} vs {}", dims.get(d).copied().unwrap_or(0), pbw.get(d).copied().unwrap_or(0)));
        } else if !q.is_complete() {
            check = check.detail(format!("quotient still nonzero at the degree cap {}", q.built_degree()));
        }
        self.checks.push(check);
        Ok(())
    }

    fn blocks(&mut self) -> anyhow::Result<()> {
        self.blocks_check();
        let q = self.quotient()?;
        let comps = self.quiver.connected_components();
        let mut dims = vec![0usize; comps.count];
        for v in 0..self.quiver.vertex_count() {
            dims[comps.labels[v as usize] as usize] += 1;
        }
        for (_, target, _, d) in q.block_table() {
            dims[comps.labels[target as usize] as usize] += d;
        }
        let blocks: Vec<Value> = comps
            .members()
            .iter()
            .zip(&dims)
            .enumerate()
            .map(|(i, (m, d))| json!({"index": i, "vertices": m.len(), "dimension": d, "representative": m[0]}))
            .collect();
        self.results.push(json!({"count": comps.count, "complete": q.is_complete(), "blocks": blocks, "provenance": self.provenance()}));
        let equal = dims.windows(2).all(|w| w[0] == w[1]);
        self.checks.push(Check::new("blocks have equal dimension", "translation by the group permutes blocks", equal));
        Ok(())
    }

    fn ext(&mut self) -> anyhow::Result<()> {
        let q = self.quotient_up_to(2)?;
        let v = self.quiver.vertex_count();
        let mut table = BTreeMap::new();
        let (mut checked, mut failures, mut first) = (0, 0, None);
        let exhaustive = v <= EXT_EXHAUSTIVE_VERTICES;
        let pairs: Vec<(u32, u32)> = if exhaustive {
            (0..v).flat_map(|s| (0..v).map(move |t| (s, t))).collect()
        } else {
            self.quiver.arrows().iter().map(|a| (a.source, a.target)).collect()
        };
        for (s, t) in pairs {
            let got = q.radical_layer_dimension(s, t)?;
            let want = self.quiver.arrows_between(s, t);
            checked += 1;
            if got != want {
                failures += 1;
                first.get_or_insert_with(|| format!("{s} -> {t}: {got} vs {want} arrows"));
            }
            if got > 0 {
                table.insert(format!("{s}->{t}"), got);
            }
        }
        self.results.push(json!({"exhaustive": exhaustive, "nonzero_pairs": table.len(), "ext1": table}));
        self.checks.push(Check::counted("dim Ext¹(S_s, S_t) = #arrows s -> t", "Ext¹ between simples of a Cayley quiver quotient", checked, failures, first));
        Ok(())
    }

    fn classify(&mut self) -> anyhow::Result<()> {
        let rep = classify(&self.cfg.cartan, self.cfg.n, self.cfg.vertex_budget)?;
        for w in &rep.evidence.witnesses {
            self.checks.push(Check::new(format!("witness {}: dimension {}", w.name, w.expected_dimension), "witness chain", w.verified));
        }
        if let Some(sep) = &rep.evidence.separated_quiver {
            if rep.t >= 3 {
                self.checks.push(Check::new(
                    "separated quiver: out-degree ≥ 3 at every level-0 vertex",
                    "separated-quiver criterion",
                    sep.min_level0_out_degree >= 3,
                ));
            }
        }
        self.checks.push(Check::new("verdict reached", rep.citation, rep.verdict != Verdict::Unclassified || self.cfg.n < 5));
        self.results.push(serde_json::to_value(&rep)?);
        Ok(())
    }

    fn witness(&mut self) -> anyhow::Result<()> {
        let chain = build_witness_chain(&self.cfg.cartan, self.cfg.n)?;
        for w in &chain {
            let mut c = Check::new(format!("{}: dimension {}", w.name, w.expected_dimension), "witness chain", w.verified);
            if !w.verified {
                c = c.detail(format!("dimension {}, oracle {:?}, quotient map {:?}", w.dimension.total, w.oracle_dimension, w.quotient_of_predecessor));
            }
            self.checks.push(c);
        }
        self.results.push(serde_json::to_value(&chain)?);
        Ok(())
    }

    fn masses(&self) -> Vec<(String, AlgebraElement<F::Elem>)> {
        let f = &self.field;
        let mut out: Vec<_> = (0..self.quiver.vertex_count()).map(|v| (format!("vertex {v}"), AlgebraElement::vertex(f, v))).collect();
        out.extend(
            self.quiver
                .arrows()
                .iter()
                .enumerate()
                .map(|(id, a)| (format!("arrow {id}"), AlgebraElement::path(f, Path { target: a.target, source: a.source, arrows: vec![id as u32] }))),
        );
        out
    }

    fn verify(&mut self, suite: Suite) -> anyhow::Result<()> {
        let f = &self.field;
        let q = &self.quiver;
        match suite {
            Suite::Hopf => {
                let d = Coproduct::new(f, q)?;
                let (mut ca, mut cu) = ((0, 0, None), (0, 0, None));
                for (name, m) in self.masses() {
                    let r = d.check_coassociativity(&m)?;
                    ca.0 += 1;
                    if !r.holds {
                        ca.1 += 1;
                        ca.2.get_or_insert(name.clone());
                    }
                    cu.0 += 1;
                    if !d.check_counit(&m)? {
                        cu.1 += 1;
                        cu.2.get_or_insert(name);
                    }
                }
                self.checks.push(Check::counted("hopf: coassociativity on vertex and arrow masses", "coproduct on the path algebra", ca.0, ca.1, ca.2));
                self.checks.push(Check::counted("hopf: counit axioms", "counit on the path algebra", cu.0, cu.1, cu.2));
            }
            Suite::Ideal => {
                let gens = IdealGenerators::cayley(f, q)?;
                let quotient = self.quotient_up_to(gens.max_degree())?;
                let d = Coproduct::new(f, q)?;
                let checks = d.delta_respects_ideal(&quotient)?;
                let fails: Vec<_> = checks.iter().filter(|c| !c.vanishes).collect();
                let first = fails.first().map(|c| format!("{} at vertex {}", c.family, c.target));
                self.checks.push(Check::counted(
                    "ideal: Δ(g) ∈ J⊗A + A⊗J for every generator",
                    "the ideal of relations is preserved by Δ",
                    checks.len(),
                    fails.len(),
                    first,
                ));
            }
            Suite::Fourier => {
                let four = Fourier::new(f, q)?;
                let rt = four.verify_iso_roundtrip()?;
                self.checks.push(Check::from_identity("fourier: Ψ∘χ_q = id on degree ≤ 1 paths", "χ_q and Ψ are mutually inverse", &rt.path_side));
                self.checks.push(Check::from_identity("fourier: χ_q∘Ψ = id on degree ≤ 1 monomials", "χ_q and Ψ are mutually inverse", &rt.presentation_side));
                self.checks.push(Check::from_identity(
                    "fourier: χ multiplicative on vertices",
                    "Fourier transform k^G → kG",
                    &four.verify_chi_multiplicative()?,
                ));
                self.checks.push(Check::from_identity("fourier: compatibility of χ_q with χ", "Fourier transform on arrows", &four.verify_compatibility()?));
                self.checks.push(Check::from_identity("fourier: type-I relations", "K_i E_j K_i^{-1} = q^{a_ij} E_j", &four.verify_type_one()));
                let gens = IdealGenerators::cayley(f, q)?;
                self.checks.push(Check::from_identity(
                    "fourier: Ψ carries type-II relations onto J",
                    "type-II relations correspond to path relations",
                    &four.verify_type_two_transport(&gens),
                ));
            }
            Suite::Crossed => {
                let cp = CrossedProduct::new(f, q)?;
                let four = Fourier::new(f, q)?;
                let d = Coproduct::new(f, q)?;
                self.checks.push(Check::from_identity("crossed: mixed-square exchange relation", "crossed tensor product", &cp.verify_exchange_relation()));
                self.checks.push(Check::from_identity(
                    "crossed: φ multiplicative on degree ≤ 1 pairs",
                    "automorphism φ of the crossed square",
                    &cp.check_phi_multiplicative(),
                ));
                self.checks.push(Check::from_identity("crossed: φ² = id on degree ≤ 1", "automorphism φ of the crossed square", &cp.check_phi_involution()));
                self.checks.push(
                    Check::from_identity("crossed: φ² = id on degree 2", "automorphism φ of the crossed square", &cp.check_phi_involution_degree(2))
                        .informational(),
                );
                let t = self.cfg.cartan.size();
                let gens: Vec<_> = (0..t)
                    .flat_map(|i| [(format!("K{}", i + 1), four.psi(&four.k_generator(i))), (format!("E{}", i + 1), four.psi(&four.e_generator(i)))])
                    .collect();
                let (vs_op, vs_delta) = cp.check_phi_delta(&d, &gens)?;
                self.checks.push(Check::from_identity("crossed: φΔ = Δ^op on generators", "φΔ = Δ^op", &vs_op));
                self.checks.push(Check::from_identity("crossed: φΔ = Δ on generators", "φΔ = Δ^op", &vs_delta).informational());
            }
            Suite::Complement => {
                let check = match self.quotient().and_then(|qq| Ok(complement_witness(f, q, &qq)?)) {
                    Ok(rep) => {
                        let c = Check::new(
                            format!("complement: {} = {} + {} with both-sided Ψ(E_i)-stability", rep.total, rep.dim_a, rep.dim_b),
                            "u_q^+ = u_q^{++} ⊕ complement",
                            rep.holds(),
                        );
                        self.results.push(json!({"complement": rep}));
                        c
                    }
                    Err(e) => Check::new("complement: decomposition", "u_q^+ = u_q^{++} ⊕ complement", false).detail(e.to_string()),
                };
                self.checks.push(check);
            }
        }
        Ok(())
    }
}
