//! One PASS/FAIL line per acceptance criterion, plus INFO lines.
//!
//! Expected values are either literal reference numbers or recomputed here
//! from scratch (generating functions, gcds, group differences) without
//! going through the library's own oracles. Tolerances are exact equality;
//! time limits are printed next to the measured runtime.
//!
//! Criteria that fail print FAIL but do not abort the run; set
//! `ACCEPTANCE_STRICT=1` to turn any FAIL into a nonzero exit.

use std::time::{Duration, Instant};

use uqpath_core::algebra::BuildOptions;
use uqpath_core::cyclotomic::nilpotency_order;
use uqpath_core::fourier::Fourier;
use uqpath_core::hopf::{Coproduct, CrossedProduct};
use uqpath_core::quiver::{GroupElement, DEFAULT_VERTEX_BUDGET};
use uqpath_core::reptype::{classify, complement_witness, Route, Verdict};
use uqpath_core::{AlgebraElement, CartanMatrix, CyclotomicField, GradedQuotient, IdealGenerators, Path, PrimeField, Quiver};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

struct Runner {
    failures: usize,
}

impl Runner {
    fn run(&mut self, id: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let ok = out.ok && took <= limit;
        if !ok {
            self.failures += 1;
        }
        let late = if out.ok && took > limit { " (over time limit)" } else { "" };
        println!("{} criterion {id}: {}{late} [{:.2}s / limit {}s]", if ok { "PASS" } else { "FAIL" }, out.detail, took.as_secs_f64(), limit.as_secs());
    }

    fn info(&self, id: &str, f: impl FnOnce() -> String) {
        let start = Instant::now();
        let s = f();
        println!("INFO {id}: {s} [{:.2}s]", start.elapsed().as_secs_f64());
    }
}

fn cartan(name: &str) -> CartanMatrix {
    CartanMatrix::named(name).unwrap()
}

fn cayley(name: &str, n: u32) -> Quiver {
    Quiver::cayley(&cartan(name), n, DEFAULT_VERTEX_BUDGET).unwrap()
}

/// Σ_{k<e} x^{k h} multiplied over the root heights, times n^t.
fn pbw_oracle(heights: &[usize], t: u32, n: u32) -> Vec<u64> {
    let e = nilpotency_order(n) as usize;
    let mut poly = vec![1u64];
    for &h in heights {
        let mut next = vec![0u64; poly.len() + (e - 1) * h];
        for (i, c) in poly.iter().enumerate() {
            for k in 0..e {
                next[i + k * h] += c;
            }
        }
        poly = next;
    }
    poly.into_iter().map(|c| c * (n as u64).pow(t)).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Instances of criteria 3 and 4: (type, n, root heights, total).
const PBW_CASES: [(&str, u32, &[usize], u128); 4] = [("A1", 5, &[1], 25), ("A1", 6, &[1], 18), ("A1xA1", 5, &[1, 1], 625), ("A2", 5, &[1, 1, 2], 3125)];

fn graded_and_total(name: &str, n: u32) -> (Vec<usize>, bool, String) {
    let quiver = cayley(name, n);
    if name == "A2" {
        // modular backend, exact cross-check through degree 6
        let fm = PrimeField::new(n, 1 << 30).unwrap();
        let qm = GradedQuotient::for_cayley(&fm, &quiver).unwrap();
        let fe = CyclotomicField::new(n).unwrap();
        let qe = GradedQuotient::for_cayley_up_to(&fe, &quiver, 6).unwrap();
        let agree = qe.graded_dims()[..=6] == qm.graded_dims()[..=6];
        (qm.graded_dims(), qm.is_complete(), format!("modular p={}, exact agrees to degree 6: {agree}", fm.prime()))
    } else {
        let fe = CyclotomicField::new(n).unwrap();
        let q = GradedQuotient::for_cayley(&fe, &quiver).unwrap();
        (q.graded_dims(), q.is_complete(), "exact".into())
    }
}

fn main() {
    let mut r = Runner { failures: 0 };

    r.run("1 (sl2 quiver shape)", Duration::from_secs(1), || {
        let q5 = cayley("A1", 5);
        let comps5 = q5.connected_components().count;
        let shape = (0..5u32).all(|v| q5.outgoing(v).len() == 1 && q5.incoming(v).len() == 1) && q5.arrows().iter().all(|a| (a.target + 5 - a.source) % 5 == 2);
        let comps6 = cayley("A1", 6).connected_components().count;
        outcome(
            comps5 == 1 && shape && comps6 == 2,
            format!("n=5: {comps5} component(s), 5-cycle K^(x-2)->K^x: {shape}; n=6: {comps6} components (want 1, true, 2)"),
        )
    });

    r.run("2 (blocks = |coker C|)", Duration::from_secs(5), || {
        let mut bad = Vec::new();
        let mut checked = 0;
        for name in ["A1", "A1xA1", "A2", "A3", "D4"] {
            let c = cartan(name);
            for n in [5u32, 6, 7, 8] {
                let components = Quiver::cayley(&c, n, DEFAULT_VERTEX_BUDGET).unwrap().connected_components().count as u64;
                let expected: u64 = c.smith_normal_form().iter().map(|&d| gcd(d.unsigned_abs(), n as u64)).product();
                checked += 1;
                if components != expected {
                    bad.push(format!("{name} n={n}: {components} vs {expected}"));
                }
            }
        }
        outcome(bad.is_empty(), format!("{checked} instances, mismatches: {bad:?}"))
    });

    let mut graded = Vec::new();
    r.run("3 (PBW total dimension)", Duration::from_secs(300), || {
        let mut parts = Vec::new();
        let mut ok = true;
        for (name, n, _, want) in PBW_CASES {
            let (dims, complete, how) = graded_and_total(name, n);
            let total: u128 = dims.iter().map(|&d| d as u128).sum();
            let good = complete && total == want;
            ok &= good;
            parts.push(if complete {
                format!("{name} n={n}: {total} (want {want}; {how})")
            } else {
                format!(
                    "{name} n={n}: quotient not finite under cap {}, last dims {:?} (want {want}; {how})",
                    dims.len() - 1,
                    &dims[dims.len().saturating_sub(4)..]
                )
            });
            graded.push((name, n, dims, complete));
        }
        outcome(ok, parts.join("; "))
    });

    r.run("4 (graded PBW series)", Duration::from_secs(5), || {
        let mut parts = Vec::new();
        let mut ok = true;
        for ((name, n, heights, _), (_, _, dims, complete)) in PBW_CASES.iter().zip(&graded) {
            let t = cartan(name).size() as u32;
            let mut want = pbw_oracle(heights, t, *n);
            want.push(0);
            let got: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
            let good = *complete && got == want;
            ok &= good;
            let first_diff = got.iter().zip(&want).position(|(a, b)| a != b);
            parts.push(match first_diff {
                None if good => format!("{name} n={n}: match"),
                None => format!("{name} n={n}: agrees on built degrees {got:?} but quotient not finite"),
                Some(d) => format!("{name} n={n}: first mismatch at degree {d} ({} vs {})", got[d], want[d]),
            });
        }
        outcome(ok, parts.join("; "))
    });

    r.run("5 (Fourier round trip and type-II transport)", Duration::from_secs(30), || {
        let mut parts = Vec::new();
        let mut ok = true;
        for (name, n) in [("A2", 5u32), ("A1", 6)] {
            let f = CyclotomicField::new(n).unwrap();
            let q = cayley(name, n);
            let four = Fourier::new(&f, &q).unwrap();
            let rt = four.verify_iso_roundtrip().unwrap();
            let gens = IdealGenerators::cayley(&f, &q).unwrap();
            let tr = four.verify_type_two_transport(&gens);
            ok &= rt.holds() && tr.holds();
            parts.push(format!(
                "{name} n={n}: round trip {}+{} elements, {} failures; transport {} relations, {} failures",
                rt.path_side.checked,
                rt.presentation_side.checked,
                rt.path_side.failures + rt.presentation_side.failures,
                tr.checked,
                tr.failures
            ));
        }
        outcome(ok, parts.join("; "))
    });

    r.run("6 (Hopf: coassociativity, counit, Δ(J) ⊆ J⊗A + A⊗J)", Duration::from_secs(120), || {
        let f = CyclotomicField::new(5).unwrap();
        let q = cayley("A2", 5);
        let d = Coproduct::new(&f, &q).unwrap();
        let mut masses: Vec<AlgebraElement<_>> = (0..q.vertex_count()).map(|v| AlgebraElement::vertex(&f, v)).collect();
        masses.extend(
            q.arrows().iter().enumerate().map(|(id, a)| AlgebraElement::path(&f, Path { target: a.target, source: a.source, arrows: vec![id as u32] })),
        );
        let coassoc = masses.iter().filter(|m| d.check_coassociativity(m).unwrap().holds).count();
        let counit = masses.iter().filter(|m| d.check_counit(m).unwrap()).count();
        let quotient = GradedQuotient::for_cayley_up_to(&f, &q, 6).unwrap();
        let ideal = d.delta_respects_ideal(&quotient).unwrap();
        let vanish = ideal.iter().filter(|c| c.vanishes).count();
        let ok = coassoc == masses.len() && counit == masses.len() && vanish == ideal.len() && !ideal.is_empty();
        outcome(ok, format!("A2 n=5: coassociative {coassoc}/{m}, counit {counit}/{m}, Δ(g) vanishes {vanish}/{}", ideal.len(), m = masses.len()))
    });

    let f5 = CyclotomicField::new(5).unwrap();
    let q5 = cayley("A2", 5);
    let cp = CrossedProduct::new(&f5, &q5).unwrap();
    let four5 = Fourier::new(&f5, &q5).unwrap();
    let delta5 = Coproduct::new(&f5, &q5).unwrap();
    let gens: Vec<(String, AlgebraElement<_>)> =
        (0..2).flat_map(|i| [(format!("K{}", i + 1), four5.psi(&four5.k_generator(i))), (format!("E{}", i + 1), four5.psi(&four5.e_generator(i)))]).collect();
    let mut phi_delta = None;
    r.run("7 (crossed-product φ: multiplicative, involutive, φΔ = Δ^op)", Duration::from_secs(30), || {
        let mult = cp.check_phi_multiplicative();
        let inv = cp.check_phi_involution();
        let (vs_op, vs_delta) = cp.check_phi_delta(&delta5, &gens).unwrap();
        let detail = format!(
            "A2 n=5: multiplicative {}/{} pairs, φ²=id {}/{}, φΔ=Δ^op on {}/{} generators (failing: {})",
            mult.checked - mult.failures,
            mult.checked,
            inv.checked - inv.failures,
            inv.checked,
            vs_op.checked - vs_op.failures,
            vs_op.checked,
            vs_op.first_failure.clone().unwrap_or_else(|| "none".into())
        );
        let ok = mult.holds() && inv.holds() && vs_op.holds();
        phi_delta = Some(vs_delta);
        outcome(ok, detail)
    });
    if let Some(vs_delta) = phi_delta {
        r.info("7 (φΔ = Δ)", || format!("holds on {}/{} generators", vs_delta.checked - vs_delta.failures, vs_delta.checked));
    }
    r.info("7 (φ² on degree 2)", || {
        let c = cp.check_phi_involution_degree(2);
        format!("{}/{} pairs", c.checked - c.failures, c.checked)
    });

    r.run("8 (Ext¹ table)", Duration::from_secs(60), || {
        let quotient = GradedQuotient::for_cayley_up_to(&f5, &q5, 2).unwrap();
        let cols: Vec<GroupElement> = [[2u32, 4], [4, 2]].iter().map(|c| GroupElement(c.to_vec())).collect(); // columns of A2 mod 5
        let mut bad = 0;
        let mut ones = 0;
        for u in 0..q5.vertex_count() {
            for v in 0..q5.vertex_count() {
                let diff = q5.element(v).unwrap().sub(&q5.element(u).unwrap(), 5);
                let want = cols.iter().filter(|c| **c == diff).count();
                let got = quotient.radical_layer_dimension(u, v).unwrap();
                ones += usize::from(got == 1);
                bad += usize::from(got != want);
            }
        }
        outcome(bad == 0, format!("A2 n=5: 625 pairs, {ones} with Ext¹ = 1, {bad} mismatches"))
    });

    r.run("9 (representation type)", Duration::from_secs(60), || {
        let mut parts = Vec::new();
        let mut ok = true;
        for n in [5u32, 6, 7, 8] {
            let rep = classify(&cartan("A1"), n, DEFAULT_VERTEX_BUDGET).unwrap();
            ok &= rep.verdict == Verdict::Finite;
        }
        parts.push("A1 n=5..8 Finite".to_string());
        for (name, n) in [("A3", 5u32), ("D4", 5), ("A4", 5)] {
            let rep = classify(&cartan(name), n, DEFAULT_VERTEX_BUDGET).unwrap();
            let sep = rep.evidence.separated_quiver.as_ref().unwrap();
            let good = rep.verdict == Verdict::Wild && rep.route == Some(Route::SeparatedQuiver) && sep.min_level0_out_degree >= 3;
            ok &= good;
            parts.push(format!("{name} n={n}: {:?}, min out-degree {}", rep.verdict, sep.min_level0_out_degree));
        }
        for (name, n) in [("A2", 5u32), ("A2", 6), ("A2", 7), ("A1xA1", 5)] {
            let rep = classify(&cartan(name), n, DEFAULT_VERTEX_BUDGET).unwrap();
            let e = nilpotency_order(n) as u128;
            let dims: Vec<u128> = rep.evidence.witnesses.iter().map(|w| w.dimension.total).collect();
            let oracles: Vec<Option<u128>> = rep.evidence.witnesses.iter().map(|w| w.oracle_dimension).collect();
            let maps = rep.evidence.witnesses.iter().skip(1).all(|w| w.quotient_of_predecessor == Some(true));
            let want = vec![e * e, 9, 5];
            let good = rep.verdict == Verdict::Wild
                && rep.route == Some(Route::WitnessChain)
                && dims == want
                && oracles.iter().zip(&want).all(|(o, w)| *o == Some(*w))
                && maps;
            ok &= good;
            parts.push(format!("{name} n={n}: {:?}, witness dims {dims:?}", rep.verdict));
        }
        outcome(ok, parts.join("; "))
    });

    r.run("10 (complement witness)", Duration::from_secs(60), || {
        let mut parts = Vec::new();
        let mut ok = true;
        for n in [5u32, 6] {
            let f = CyclotomicField::new(n).unwrap();
            let q = cayley("A1", n);
            let quotient = GradedQuotient::for_cayley(&f, &q).unwrap();
            let rep = complement_witness(&f, &q, &quotient).unwrap();
            let e = nilpotency_order(n) as usize;
            let good = rep.holds() && rep.dim_a == e && rep.dim_b == n as usize * e - e;
            ok &= good;
            parts.push(format!("A1 n={n}: {} + {} = {}, stable both sides: {}", rep.dim_a, rep.dim_b, rep.total, rep.stable_left && rep.stable_right));
        }
        outcome(ok, parts.join("; "))
    });

    r.info("3/4 (A2 with root-vector power relations)", || {
        let mut parts = Vec::new();
        for n in [5u32, 6] {
            let f = PrimeField::new(n, 1 << 30).unwrap();
            let q = cayley("A2", n);
            let mut gens = IdealGenerators::cayley(&f, &q).unwrap();
            gens.add_root_vector_powers(&f, &q).unwrap();
            let cap = cartan("A2").pbw_top_degree(n).unwrap() + 1;
            let quotient = GradedQuotient::build(&f, &q, gens, BuildOptions::up_to(cap)).unwrap();
            let mut want = pbw_oracle(&[1, 1, 2], 2, n);
            want.push(0);
            let got: Vec<u64> = quotient.graded_dims().iter().map(|&d| d as u64).collect();
            parts.push(format!("n={n}: total {}, graded series matches: {}", quotient.total_dimension(), got == want));
        }
        parts.join("; ")
    });

    println!("acceptance: {} criterion failure(s)", r.failures);
    if r.failures > 0 && std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
