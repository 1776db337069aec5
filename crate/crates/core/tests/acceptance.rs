//! Acceptance suite: one line per criterion, exact equality throughout,
//! wall-time limits enforced. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hermitian_young::*;
use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = std::result::Result<String, String>;

fn tab(s: &str) -> YoungTableau {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn c1_hook_product() -> Outcome {
    let hook = YoungDiagram::new(vec![3, 2]).map_err(err)?.hook_product();
    ensure(hook == BigUint::from(24u32), || format!("|(3,2)| = {hook}"))?;
    Ok("|(3,2)| = 24".into())
}

fn c2_littlewood() -> Outcome {
    let a = young_operator(&tab("123/45")).map_err(err)?;
    let b = young_operator(&tab("135/24")).map_err(err)?;
    let ba = &b * &a;
    let ab = &a * &b;
    ensure(ba.is_zero(), || format!("Y_135/24 Y_123/45 has {} terms", ba.len()))?;
    ensure(!ab.is_zero(), || "Y_123/45 Y_135/24 vanished".into())?;
    Ok(format!("Y_135/24·Y_123/45 = 0, Y_123/45·Y_135/24 has {} terms", ab.len()))
}

fn conventional_failures(n: usize) -> std::result::Result<Vec<(String, String)>, String> {
    let syt = enumerate_syt(n).map_err(err)?;
    let ys: Vec<_> = syt.iter().map(|t| young_operator(t).unwrap()).collect();
    let mut out = Vec::new();
    for i in 0..syt.len() {
        for j in 0..syt.len() {
            let expected = if i == j { ys[i].clone() } else { AlgebraElement::zero(n) };
            if &ys[i] * &ys[j] != expected {
                out.push((syt[i].to_string(), syt[j].to_string()));
            }
        }
    }
    Ok(out)
}

fn c3_conventional_window() -> Outcome {
    for n in 1..=4 {
        let f = conventional_failures(n)?;
        ensure(f.is_empty(), || format!("n={n}: failing pairs {f:?}"))?;
    }
    let mut f = conventional_failures(5)?;
    f.sort();
    let mut expected = vec![
        ("123/45".to_string(), "135/24".to_string()),
        ("12/34/5".to_string(), "14/25/3".to_string()),
    ];
    expected.sort();
    ensure(f == expected, || format!("n=5 failing pairs {f:?}"))?;
    for (l, r) in &f {
        let reverse = &young_operator(&tab(r)).unwrap() * &young_operator(&tab(l)).unwrap();
        ensure(reverse.is_zero(), || format!("reverse product {r}·{l} nonzero"))?;
    }
    Ok("transversal for n ≤ 4; n = 5 fails only on 123/45·135/24 and its conjugate 12/34/5·14/25/3".into())
}

fn c4_projector_properties() -> Outcome {
    let cache = ProjectorCache::new();
    let mut pairs = 0;
    for n in 2..=5 {
        let syt = enumerate_syt(n).map_err(err)?;
        let ps: Vec<_> = syt.iter().map(|t| cache.get(t).unwrap()).collect();
        let zero = AlgebraElement::zero(n);
        for i in 0..syt.len() {
            for j in 0..syt.len() {
                let expected = if i == j { &*ps[i] } else { &zero };
                ensure(&(&*ps[i] * &*ps[j]) == expected, || {
                    format!("(i) fails for {}·{}", syt[i], syt[j])
                })?;
                pairs += 1;
            }
        }
        let mut sum = AlgebraElement::zero(n);
        for (t, p) in syt.iter().zip(&ps) {
            let tr = p.trace_polynomial();
            ensure(tr == t.shape().dimension_ratio(), || format!("(ii) fails for {t}: {tr}"))?;
            ensure(tr == young_operator(t).unwrap().trace_polynomial(), || {
                format!("(ii) tr P ≠ tr Y for {t}")
            })?;
            ensure(p.involution() == **p, || format!("(iv) fails for {t}"))?;
            sum = &sum + p;
        }
        ensure(sum == AlgebraElement::identity(n), || format!("(iii) fails at n={n}"))?;
    }
    Ok(format!("(i)–(iv) hold for n = 2..5 ({pairs} ordered pairs)"))
}

fn c5_three_box_identity() -> Outcome {
    let cache = ProjectorCache::new();
    let lhs = &*cache.get(&tab("12/3")).map_err(err)? + &*cache.get(&tab("13/2")).map_err(err)?;
    let rhs = &young_operator(&tab("12/3")).map_err(err)? + &young_operator(&tab("13/2")).map_err(err)?;
    ensure(lhs == rhs, || "P_12/3 + P_13/2 ≠ Y_12/3 + Y_13/2".into())?;
    Ok("P_12/3 + P_13/2 = Y_12/3 + Y_13/2".into())
}

fn recursion_rhs(t: &YoungTableau, parent_op: &AlgebraElement) -> PolyAlgebraElement {
    let parent = t.parent().unwrap();
    let ratio = Rational::new(
        BigInt::from(parent.tableau.shape().hook_product()),
        BigInt::from(t.shape().hook_product()),
    );
    let factor = Polynomial::linear(Rational::from_integer(BigInt::from(
        parent.p as i64 - parent.q as i64,
    )))
    .scale(&ratio);
    PolyAlgebraElement::scaled(&factor, parent_op)
}

fn c6_partial_trace_recursion() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        for t in enumerate_syt(n).map_err(err)? {
            let parent = t.parent().unwrap().tableau;
            let y = young_operator(&t).map_err(err)?;
            let y_rhs = recursion_rhs(&t, &young_operator(&parent).map_err(err)?);
            ensure(y.partial_trace().map_err(err)? == y_rhs, || format!("Y recursion fails for {t}"))?;
            let p = hermitian_young(&t).map_err(err)?;
            let p_rhs = recursion_rhs(&t, &*hermitian_young(&parent).map_err(err)?);
            ensure(p.partial_trace().map_err(err)? == p_rhs, || format!("P recursion fails for {t}"))?;
            count += 2;
        }
    }
    Ok(format!("tr' X_T = (N+p−q)|T'|/|T| X_T' for {count} operators"))
}

fn c7_shortcuts() -> Outcome {
    let t = tab("123/45");
    let shortcut = hermitian::sandwich_with_ancestor(&t, &tab("123")).map_err(err)?;
    ensure(shortcut == *hermitian_young(&t).map_err(err)?, || "123/45 shortcut differs".into())?;
    let u = tab("13/24");
    let shortcut = hermitian::sandwich_with_ancestor(&u, &tab("1/2")).map_err(err)?;
    ensure(shortcut == *hermitian_young(&u).map_err(err)?, || "13/24 shortcut differs".into())?;
    let v = tab("135/24");
    let via_parent = hermitian::sandwich_with_ancestor(&v, &u).map_err(err)?;
    ensure(via_parent == *hermitian_young(&v).map_err(err)?, || "135/24 recursion differs".into())?;
    let y = young_operator(&v).map_err(err)?;
    let half = y.scale(&Rational::new(1.into(), 2.into()));
    ensure(&half * &half == y.scale(&Rational::new(1.into(), 4.into())), || {
        "((1/2)Y)^2 ≠ (1/4)Y".into()
    })?;
    Ok("shortcuts for 123/45 and 13/24 agree with the recursion; ((1/2)Y_135/24)^2 = (1/4)Y_135/24".into())
}

fn c8_tensor() -> Outcome {
    let mut summary = Vec::new();
    for dim in [2usize, 3] {
        for n in 1..=5 {
            let syt = enumerate_syt(n).map_err(err)?;
            let mats: Vec<TensorOperator> = syt
                .iter()
                .map(|t| TensorOperator::realize(&hermitian_young(t).unwrap(), dim).unwrap())
                .collect();
            let report = tensor::orthogonality_report(&mats).map_err(err)?;
            if let Some(f) = report.failures().next() {
                return Err(format!("N={dim} n={n}: {} failed: {:?}", f.id, f.witness));
            }
            for (t, m) in syt.iter().zip(&mats) {
                ensure(m.is_idempotent(), || format!("N={dim}: D(P_{t}) not idempotent"))?;
                let expected = t.shape().dimension(dim as u64);
                let rank = BigUint::from(m.rank());
                ensure(rank == expected, || format!("N={dim}: rank D(P_{t}) = {rank} ≠ {expected}"))?;
                ensure(m.trace() == Rational::from_integer(expected.clone().into()), || {
                    format!("N={dim}: trace D(P_{t}) = {}", m.trace())
                })?;
                if t.shape().row_count() > dim {
                    ensure(m.is_zero(), || format!("N={dim}: D(P_{t}) should vanish"))?;
                }
            }
        }
        summary.push(format!("N={dim} ok"));
    }
    Ok(format!("symmetric, idempotent, orthogonal, complete, trace = rank = f/|T|; {}", summary.join(", ")))
}

fn random_element(rng: &mut StdRng, perms: &[Permutation]) -> AlgebraElement {
    let k = rng.gen_range(1..=6);
    let terms: Vec<_> = perms
        .choose_multiple(rng, k)
        .map(|p| {
            let num: i64 = rng.gen_range(-5..=5);
            let den: i64 = rng.gen_range(1..=4);
            (p.clone(), Rational::new(num.into(), den.into()))
        })
        .collect();
    AlgebraElement::from_terms(4, terms).unwrap()
}

fn c9_faithfulness() -> Outcome {
    const SAMPLES: usize = 128;
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let perms = Permutation::all(4);
    for dim in [2usize, 3] {
        let n = Rational::from_integer(BigInt::from(dim));
        for s in 0..SAMPLES {
            let a = random_element(&mut rng, &perms);
            let b = random_element(&mut rng, &perms);
            let ma = TensorOperator::realize(&a, dim).map_err(err)?;
            let mb = TensorOperator::realize(&b, dim).map_err(err)?;
            let mab = TensorOperator::realize(&(&a * &b), dim).map_err(err)?;
            ensure(ma.multiply(&mb).map_err(err)? == mab, || format!("N={dim} sample {s}: homomorphism"))?;
            ensure(ma.transpose() == TensorOperator::realize(&a.involution(), dim).map_err(err)?, || {
                format!("N={dim} sample {s}: adjoint")
            })?;
            ensure(ma.trace() == a.trace_polynomial().eval(&n), || format!("N={dim} sample {s}: trace"))?;
        }
    }
    Ok(format!("homomorphism, adjoint and trace faithfulness on {SAMPLES} samples × N ∈ {{2,3}}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("hook product of (3,2)", Duration::from_millis(1), c1_hook_product),
        ("Littlewood counterexample", Duration::from_secs(1), c2_littlewood),
        ("conventional transversality window", Duration::from_secs(10), c3_conventional_window),
        ("Hermitian projector properties n = 2..5", Duration::from_secs(60), c4_projector_properties),
        ("three-box sum identity", Duration::from_millis(1), c5_three_box_identity),
        ("partial-trace recursion", Duration::from_secs(30), c6_partial_trace_recursion),
        ("construction shortcuts and squaring", Duration::from_secs(5), c7_shortcuts),
        ("tensor cross-validation", Duration::from_secs(180), c8_tensor),
        ("faithfulness properties", Duration::from_secs(30), c9_faithfulness),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; exceeded time limit")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} [{}] {name}: {detail} ({:.3} ms, limit {:?})",
            i + 1,
            elapsed.as_secs_f64() * 1e3,
            limit
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
