//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use verpn_core::charring::{
    decompose, ext_power_char, simple_char, sym_power_char, tilting_char, Basis,
};
use verpn_core::cli::plot::{region_grid, region_svg};
use verpn_core::cyclo::{vanishes_at_root, CyclotomicIndex};
use verpn_core::principal::{restriction_ideal_level, PrincipalMap};
use verpn_core::rootdatum::{GWeight, RegionLabel, RootDatum};
use verpn_core::sl2tilt::{hom_dim, socle_unit_test};
use verpn_core::versl2::{
    check_frobenius_embedding, fusion, image_comp_factors, in_ibar_given_tbar, projective_of, FusionTable, VerClass,
    VerCtx,
};
use verpn_core::Prime;

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn ctx(q: u64, n: u32) -> VerCtx {
    VerCtx::new(p(q), n).unwrap()
}

fn simple_factors(a: u64, q: u64) -> BTreeMap<u64, u64> {
    let d = decompose(&tilting_char(a, p(q)), Basis::Simple, p(q)).unwrap();
    d.indices().map(|k| (k, d.mult_u64(k))).collect()
}

fn class_of(pairs: &[(usize, u64)], size: usize) -> VerClass {
    let mut v = vec![0u64; size];
    for &(i, m) in pairs {
        v[i] = m;
    }
    VerClass::from_u64(&v)
}

/// `dim L_i` from the base-`p` digits, without going through characters.
fn digit_dim(mut i: u64, q: u64) -> BigUint {
    let mut d = BigUint::from(1u32);
    while i > 0 {
        d *= i % q + 1;
        i /= q;
    }
    d
}

fn criterion_1() -> Result<String, String> {
    let expected: [(u64, &[(u64, u64)]); 5] = [
        (3, &[(1, 2), (3, 1)]),
        (4, &[(0, 2), (4, 1)]),
        (5, &[(5, 1)]),
        (6, &[(0, 1), (4, 2), (6, 1)]),
        (7, &[(1, 1), (3, 2), (7, 1)]),
    ];
    for (a, want) in expected {
        let got = simple_factors(a, 3);
        let want: BTreeMap<u64, u64> = want.iter().copied().collect();
        if got != want {
            return Err(format!("T{a}: got {got:?}, want {want:?}"));
        }
    }
    let c = ctx(3, 2);
    let t6 = image_comp_factors(&tilting_char(6, p(3)), &c).map_err(|e| e.to_string())?;
    let t7 = image_comp_factors(&tilting_char(7, p(3)), &c).map_err(|e| e.to_string())?;
    if t6 != class_of(&[(4, 2), (0, 1)], 6) || t7 != class_of(&[(3, 2), (1, 1)], 6) {
        return Err(format!("Ver9 images: T6 -> {:?}, T7 -> {:?}", t6.coeffs, t7.coeffs));
    }
    Ok("T3..T7 factors at p=3 and Ver9 images of T6, T7 exact".into())
}

fn criterion_2() -> Result<String, String> {
    let mut checked = 0;
    for q in [2u64, 3, 5] {
        for n in 1..=3u32 {
            let idx = CyclotomicIndex::new(p(q), n).unwrap();
            let want_order = if q == 2 { 1 << (n + 1) } else { q.pow(n) };
            if idx.order().unwrap() != want_order {
                return Err(format!("order for p={q} n={n}"));
            }
            for a in 0..=200u64 {
                let vanishes = vanishes_at_root(&tilting_char(a, p(q)), idx);
                if vanishes != (a + 1 >= q.pow(n)) {
                    return Err(format!("p={q} n={n} a={a}: vanishes={vanishes}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} cases, zero discrepancies"))
}

fn criterion_3() -> Result<String, String> {
    let mut checked = 0;
    for (q, n) in [(2u64, 2u32), (2, 3), (3, 2), (3, 3), (5, 2)] {
        let c = ctx(q, n);
        for i in 0..c.num_simples() {
            let a = projective_of(i, &c).unwrap();
            for b in c.projective_window() {
                let hom = hom_dim(a, b, p(q));
                let mult = simple_factors(b, q).get(&i).copied().unwrap_or(0);
                if hom != BigUint::from(mult) {
                    return Err(format!("p={q} n={n} i={i} b={b}: Hom = {hom}, [T_b:L_i] = {mult}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (i, b) pairs agree"))
}

/// Truncated Clebsch-Gordan rule from weight multiplicities alone.
fn clebsch_gordan_truncated(i: u64, j: u64, q: u64) -> BTreeMap<u64, u64> {
    let weights = |a: u64| -> BTreeMap<i64, u64> { (0..=a).map(|k| (a as i64 - 2 * k as i64, 1)).collect() };
    let mut prod: BTreeMap<i64, u64> = BTreeMap::new();
    for (x, m) in weights(i) {
        for (y, n) in weights(j) {
            *prod.entry(x + y).or_default() += m * n;
        }
    }
    let mult = |w: i64| prod.get(&w).copied().unwrap_or(0);
    let mut out = BTreeMap::new();
    for k in 0..=(i + j) {
        let m = mult(k as i64) - mult(k as i64 + 2);
        if m > 0 && k + i + j <= 2 * q - 4 {
            out.insert(k, m);
        }
    }
    out
}

fn table_checks(t: &FusionTable, q: u64) -> Result<(), String> {
    let s = t.size();
    let n = |i: usize, j: usize, k: usize| t.get(i, j, k);
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                if n(i, j, k) != n(j, i, k) {
                    return Err(format!("not commutative at ({i},{j},{k})"));
                }
            }
            let unit_ok = (0..s).all(|k| n(0, j, k) == u64::from(k == j));
            if !unit_ok {
                return Err(format!("L0 is not a unit on L{j}"));
            }
            // mod-p dimensions are multiplicative
            let lhs = digit_dim(i as u64, q) * digit_dim(j as u64, q) % q;
            let rhs: BigUint = (0..s).map(|k| BigUint::from(n(i, j, k)) * digit_dim(k as u64, q)).sum::<BigUint>() % q;
            if lhs != rhs {
                return Err(format!("dim mod p fails at ({i},{j})"));
            }
        }
    }
    for i in 0..s {
        for j in 0..s {
            for l in 0..s {
                for m in 0..s {
                    let left: u64 = (0..s).map(|k| n(i, j, k) * n(k, l, m)).sum();
                    let right: u64 = (0..s).map(|k| n(j, l, k) * n(i, k, m)).sum();
                    if left != right {
                        return Err(format!("not associative at ({i},{j},{l};{m})"));
                    }
                }
            }
        }
    }
    if t.simples.iter().enumerate().any(|(i, d)| *d != digit_dim(i as u64, q)) {
        return Err("simple dimensions".into());
    }
    Ok(())
}

fn criterion_4() -> Result<String, String> {
    for (q, n) in [(2u64, 2u32), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let t = fusion(&ctx(q, n)).map_err(|e| format!("p={q} n={n}: {e}"))?;
        table_checks(&t, q).map_err(|e| format!("p={q} n={n}: {e}"))?;
        if n == 1 {
            let s = t.size();
            for i in 0..s {
                for j in 0..s {
                    let cg = clebsch_gordan_truncated(i as u64, j as u64, q);
                    for k in 0..s {
                        let want = cg.get(&(k as u64)).copied().unwrap_or(0);
                        if t.get(i, j, k) != want {
                            return Err(format!("p={q}: N_({i},{j})^{k} = {}, Clebsch-Gordan gives {want}", t.get(i, j, k)));
                        }
                    }
                }
            }
        }
    }
    Ok("5 tables commutative, associative, unital, nonnegative; n=1 matches truncated Clebsch-Gordan".into())
}

fn criterion_5() -> Result<String, String> {
    for (q, n) in [(3u64, 2u32), (2, 3)] {
        let c = ctx(q, n);
        let t = fusion(&c).map_err(|e| e.to_string())?;
        for i in 0..c.num_simples() {
            let mut prod = VerClass::simple(&c, 0).unwrap();
            let (mut rest, mut place) = (i, 1u64);
            while rest > 0 {
                let digit_class = VerClass::simple(&c, (rest % q) * place).unwrap();
                prod = t.multiply(&prod, &digit_class);
                rest /= q;
                place *= q;
            }
            if prod != VerClass::simple(&c, i).unwrap() {
                return Err(format!("p={q} n={n}: L{i} is not the product of its digit classes"));
            }
        }
    }
    Ok("every simple of Ver9 and Ver8 is the product of its digit classes".into())
}

fn criterion_6() -> Result<String, String> {
    for (q, n) in [(2u64, 1u32), (2, 2), (3, 1)] {
        let small = fusion(&ctx(q, n)).map_err(|e| e.to_string())?;
        let large = fusion(&ctx(q, n + 1)).map_err(|e| e.to_string())?;
        check_frobenius_embedding(&small, &large).map_err(|e| format!("p={q} n={n}: {e}"))?;
        let s = small.size();
        let qi = q as usize;
        for i in 0..s {
            for j in 0..s {
                for k in 0..s {
                    if small.get(i, j, k) != large.get(qi * i, qi * j, qi * k) {
                        return Err(format!("p={q} n={n}: ({i},{j},{k})"));
                    }
                }
            }
        }
    }
    Ok("i -> p*i embeds fusion rules for (2,1), (2,2), (3,1)".into())
}

fn criterion_7() -> Result<String, String> {
    for (q, n) in [(3u64, 2u32), (2, 3)] {
        let c = ctx(q, n);
        let l1 = simple_char(1, p(q));
        let top = q.pow(n) - 1;
        for r in 0..top {
            let sym = sym_power_char(&l1, r as usize).map_err(|e| e.to_string())?;
            let img = image_comp_factors(&sym, &c).map_err(|e| format!("Sym^{r}: {e}"))?;
            if img.is_zero() {
                return Err(format!("p={q} n={n}: image of Sym^{r} L1 is zero"));
            }
        }
        let st = sym_power_char(&l1, top as usize).map_err(|e| e.to_string())?;
        if st != tilting_char(top, p(q)) || st != simple_char(top, p(q)) {
            return Err(format!("p={q} n={n}: Sym^{top} L1 is not St_{n}"));
        }
        if !in_ibar_given_tbar(&st, &c).map_err(|e| e.to_string())? {
            return Err(format!("p={q} n={n}: St_{n} not in Ibar"));
        }
    }
    let c = ctx(3, 2);
    let l2 = simple_char(2, p(3));
    let ext4 = ext_power_char(&l2, 4).map_err(|e| e.to_string())?;
    if !ext4.is_zero() {
        return Err("Λ^4 L2 is nonzero".into());
    }
    let sym7 = sym_power_char(&l2, 7).map_err(|e| e.to_string())?;
    if !in_ibar_given_tbar(&sym7, &c).map_err(|e| e.to_string())? {
        return Err("Sym^7 L2 not in Ibar".into());
    }
    Ok("Sym^r L1 images nonzero below p^n-1, Sym^{p^n-1} L1 = St_n in Ibar; Λ^4 L2 = 0, Sym^7 L2 in Ibar".into())
}

fn criterion_8() -> Result<String, String> {
    let start = Instant::now();
    let mut cases = Vec::new();
    for q in [3u64, 5, 7] {
        for n in [1u32, 2] {
            cases.push(("A2", q, n));
        }
    }
    cases.extend([("B2", 5, 1), ("B2", 7, 1), ("G2", 11, 1), ("G2", 13, 1)]);
    for (ty, q, n) in &cases {
        let pm = PrincipalMap::new(RootDatum::parse(ty).unwrap());
        let st = pm.steinberg_restriction(p(*q), *n).map_err(|e| e.to_string())?;
        let dim = BigInt::from(*q).pow(n * pm.datum.num_positive_roots() as u32);
        if st.eval_at_one() != dim {
            return Err(format!("{ty} p={q} n={n}: dimension"));
        }
        let level = restriction_ideal_level(&st, p(*q), *n).map_err(|e| e.to_string())?;
        if level != (true, true) {
            return Err(format!("{ty} p={q} n={n}: level {level:?}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 60.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("{} cases in I_n \\ I_(n+1), {secs:.2}s", cases.len()))
}

/// Label from the definitions, written out for `A2`, `p = 5`, `n = 2`.
fn a2_label_oracle(a: i64, b: i64) -> &'static str {
    let in_alcove = |x: i64, y: i64| x + y + 2 < 5;
    if a < 4 || b < 4 {
        if in_alcove(a, b) {
            "A"
        } else {
            "I1\\J2"
        }
    } else {
        let (ma, mb) = ((a - 4) / 5, (b - 4) / 5);
        if in_alcove(ma, mb) {
            "J2\\I2"
        } else {
            "I2"
        }
    }
}

fn criterion_9() -> Result<String, String> {
    let rd = RootDatum::parse("A2").unwrap();
    let grid = region_grid(&rd, p(5), 2, 31).map_err(|e| e.to_string())?;
    let labels: BTreeSet<String> = grid.values().map(|l| l.to_string()).collect();
    let want: BTreeSet<String> = ["A", "I1\\J2", "J2\\I2", "I2"].iter().map(|s| s.to_string()).collect();
    if labels != want {
        return Err(format!("labels {labels:?}"));
    }
    for (lam, label) in &grid {
        let want = a2_label_oracle(lam.0[0], lam.0[1]);
        if label.to_string() != want {
            return Err(format!("{lam}: {label} vs {want}"));
        }
    }
    for (w, want) in [([0, 0], "A"), ([2, 2], "I1\\J2"), ([4, 4], "J2\\I2"), ([14, 9], "I2")] {
        let l = rd.classify_region(&GWeight(w.to_vec()), p(5), 2).map_err(|e| e.to_string())?;
        if l.to_string() != want {
            return Err(format!("{w:?}: {l}"));
        }
    }
    let svg = region_svg(&rd, p(5), 2, 31).map_err(|e| e.to_string())?;
    let dots = svg.matches("data-region=").count();
    if !svg.starts_with("<svg") || dots != 32 * 32 {
        return Err(format!("SVG has {dots} weights"));
    }
    for label in [RegionLabel::FundamentalAlcove, RegionLabel::IOutsideJ(1), RegionLabel::JMinusI(2), RegionLabel::Ideal(2)] {
        if !svg.contains(&format!("data-region=\"{label}\"")) {
            return Err(format!("SVG misses {label}"));
        }
    }
    Ok(format!("{} weights, 4 regions, spot checks and SVG ({} bytes)", grid.len(), svg.len()))
}

fn criterion_10() -> Result<String, String> {
    for q in [2u64, 3, 5] {
        for n in 1..=3u32 {
            let got = socle_unit_test(p(q), n).map_err(|e| e.to_string())?;
            let want = vec![2 * (q.pow(n - 1) - 1)];
            if got != want {
                return Err(format!("p={q} n={n}: {got:?}"));
            }
        }
    }
    Ok("socle test returns [2(p^(n-1)-1)] for all 9 cases".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("tilting diagrams at p=3", criterion_1),
        ("cyclotomic vanishing sweep", criterion_2),
        ("Cartan-Hom consistency", criterion_3),
        ("fusion table integrity", criterion_4),
        ("Steinberg factorization", criterion_5),
        ("Frobenius inclusion", criterion_6),
        ("Sym and exterior powers", criterion_7),
        ("principal Steinberg restriction", criterion_8),
        ("A2 region chain at p=5", criterion_9),
        ("socle of the unit", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
