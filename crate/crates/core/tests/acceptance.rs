//! End-to-end checks, one printed line per criterion.
//!
//! Runs without the libtest harness so that every line reaches the
//! terminal; the process fails if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lcodes::catalog;
use lcodes::classify::{
    census_by_min_weight, classify_self_dual, count_distinct_self_dual, even_odd_census,
    extremal_bound, extremal_records, indecomposable_count, mass_check, sharpened_bound,
    ClassRecord,
};
use lcodes::enumerators::{
    hamming_we, macwilliams_hamming, macwilliams_swe, swe,
};
use lcodes::invariants::{
    decompose_even, decompose_general, molien_by_averaging, molien_closed_form,
    verify_ew_relation,
};
use lcodes::maps::{beta, beta_word, marking_classes, phi, phi_inv, phi_inv_marked, psi, sigma};
use lcodes::poly::{Poly, UV, XYZ};
use lcodes::symmetry::canonical_code;
use lcodes::tables;
use lcodes::{Flavor, LinearCode, SignedPermutation, Word};

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Classification results shared between criteria.
struct Runs {
    general: BTreeMap<usize, (Vec<ClassRecord>, Duration)>,
    even: BTreeMap<usize, (Vec<ClassRecord>, Duration)>,
}

impl Runs {
    fn compute() -> Runs {
        let mut general = BTreeMap::new();
        let mut even = BTreeMap::new();
        for n in 1..=6 {
            let t = Instant::now();
            let r = classify_self_dual(n, false).expect("classification");
            general.insert(n, (r, t.elapsed()));
        }
        for n in 1..=7 {
            let t = Instant::now();
            let r = classify_self_dual(n, true).expect("classification");
            even.insert(n, (r, t.elapsed()));
        }
        Runs { general, even }
    }

    fn get(&self, n: usize, even: bool) -> &[ClassRecord] {
        let map = if even { &self.even } else { &self.general };
        &map[&n].0
    }
}

fn random_code(rng: &mut StdRng, n: usize) -> LinearCode {
    let gens: Vec<Word> = (0..rng.gen_range(0..=n + 1))
        .map(|_| Word::from_bits(n, rng.gen_range(0..1u64 << (2 * n))).expect("length"))
        .collect();
    LinearCode::span(Flavor::L, n, &gens).expect("span")
}

fn random_element(rng: &mut StdRng, n: usize) -> SignedPermutation {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let local = (0..n).map(|_| rng.gen_range(0..2u8)).collect();
    SignedPermutation::new(Flavor::L, perm, local).expect("valid element")
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{elapsed:.2?} (limit {limit:?})")
}

fn table1() -> Outcome {
    let t = Instant::now();
    let ok = tables::table1().map(|s| s == tables::TABLE1).unwrap_or(false);
    let e = t.elapsed();
    check(ok && e < Duration::from_secs(1), within(e, Duration::from_secs(1)))
}

fn table3() -> Outcome {
    let t = Instant::now();
    let text = tables::table3().unwrap_or_default();
    let rows = text.lines().filter(|l| !l.starts_with('#')).count();
    let e = t.elapsed();
    check(
        text == tables::TABLE3 && rows == 29 && e < Duration::from_secs(5),
        format!("{rows} rows, {}", within(e, Duration::from_secs(5))),
    )
}

fn counts(runs: &Runs) -> Outcome {
    let t: Vec<usize> = (1..=6).map(|n| runs.get(n, false).len()).collect();
    let e: Vec<usize> = (1..=7).map(|n| runs.get(n, true).len()).collect();
    let fast: Duration = (1..=5).map(|n| runs.general[&n].1).sum();
    let t6 = runs.general[&6].1;
    let e7 = runs.even[&7].1;
    let half_hour = Duration::from_secs(1800);
    check(
        t == [2, 5, 13, 40, 141, 658]
            && e == [1, 2, 4, 9, 21, 64, 218]
            && fast < Duration::from_secs(60)
            && t6 < half_hour
            && e7 < half_hour,
        format!("t={t:?} e={e:?}; n<=5 {fast:.1?}, n=6 {t6:.1?}, even n=7 {e7:.1?}"),
    )
}

fn masses(runs: &Runs) -> Outcome {
    let mut ok = true;
    let mut failures = Vec::new();
    for n in 1..=6 {
        let r = mass_check(runs.get(n, false), n, false);
        if !r.matches() {
            ok = false;
            failures.push(format!("n={n}: {r}"));
        }
    }
    for n in 1..=7 {
        let r = mass_check(runs.get(n, true), n, true);
        if !r.matches() {
            ok = false;
            failures.push(format!("even n={n}: {r}"));
        }
    }
    let brute: Vec<usize> = (1..=4)
        .map(|n| count_distinct_self_dual(n, false).unwrap_or(0))
        .collect();
    let brute_even: Vec<usize> = (1..=4)
        .map(|n| count_distinct_self_dual(n, true).unwrap_or(0))
        .collect();
    ok &= brute == [3, 15, 135, 2295] && brute_even == [2, 6, 30, 270];
    let mut detail = format!("distinct codes {brute:?} / even {brute_even:?}");
    if !failures.is_empty() {
        detail.push_str(&format!("; {}", failures.join("; ")));
    }
    check(ok, detail)
}

fn indecomposables(runs: &Runs) -> Outcome {
    let i: Vec<usize> = (1..=5).map(|n| indecomposable_count(runs.get(n, false))).collect();
    let j: Vec<usize> = (1..=5).map(|n| indecomposable_count(runs.get(n, true))).collect();
    check(
        i == [2, 2, 5, 16, 64] && j == [1, 1, 2, 4, 10],
        format!("i={i:?} j={j:?}"),
    )
}

fn hexacode() -> Outcome {
    let t = Instant::now();
    let h = catalog::hexacode();
    let classes = match marking_classes(&h) {
        Ok(c) => c,
        Err(e) => return check(false, e.to_string()),
    };
    let mut orbits: Vec<u64> = classes.iter().map(|c| c.orbit_size).collect();
    let mut auts: Vec<u128> = classes.iter().map(|c| c.stabilizer_order).collect();
    orbits.sort_unstable();
    auts.sort_unstable();
    let top = classes
        .iter()
        .find(|c| c.stabilizer_order == 120)
        .and_then(|c| phi_inv_marked(&h, &c.representative).ok())
        .and_then(|c| tables::euclid_row(&c).ok());
    let golden = tables::table2().map(|s| s == tables::TABLE2).unwrap_or(false);
    let e = t.elapsed();
    check(
        classes.len() == 5
            && orbits == [18, 45, 180, 216, 270]
            && auts == [8, 10, 12, 48, 120]
            && top.as_deref() == Some(&[1, 0, 0, 0, 0, 0, 31, 0, 15, 0, 15, 0, 2][..])
            && golden
            && e < Duration::from_secs(60),
        format!("orbits {orbits:?}, |Aut| {auts:?}, {}", within(e, Duration::from_secs(60))),
    )
}

fn delta_plus_markings() -> Outcome {
    let t = Instant::now();
    let classes = catalog::kleinian_delta_plus(3)
        .and_then(|d| marking_classes(&d))
        .unwrap_or_default();
    let mut orbits: Vec<u64> = classes.iter().map(|c| c.orbit_size).collect();
    orbits.sort_unstable();
    let e = t.elapsed();
    check(
        orbits == [1, 4, 4, 6, 12] && orbits.iter().sum::<u64>() == 27 && e < Duration::from_secs(1),
        format!("orbits {orbits:?}, {}", within(e, Duration::from_secs(1))),
    )
}

fn macwilliams() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let c = random_code(&mut rng, n);
        let size = BigInt::from(c.size());
        let d = c.dual();
        let w_ok = macwilliams_hamming(&hamming_we(&c).unwrap(), &size).ok()
            == hamming_we(&d).ok();
        let s_ok = macwilliams_swe(&swe(&c).unwrap(), &size).ok() == swe(&d).ok();
        if !(w_ok && s_ok) {
            bad += 1;
        }
    }
    let e = t.elapsed();
    check(
        bad == 0 && e < Duration::from_secs(60),
        format!("500 codes, {bad} mismatches, {}", within(e, Duration::from_secs(60))),
    )
}

fn sub_images(vars: &'static [&'static str], u: usize, v: usize) -> [Poly; 3] {
    let a = Poly::var(vars, u);
    let b = Poly::var(vars, v);
    let two = Poly::constant(vars, 2);
    [
        &(&a * &a) + &(&b * &b),
        &two * &(&a * &b),
        &two * &(&b * &b),
    ]
}

fn map_properties(runs: &Runs) -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let mut failures: BTreeMap<&str, usize> = BTreeMap::new();
    let mut fail = |what: &'static str| *failures.entry(what).or_default() += 1;
    let [su, sv, sw] = sub_images(UV, 0, 1);
    let psi_sub = {
        let x = Poly::var(XYZ, 0);
        let y = Poly::var(XYZ, 1);
        let z = Poly::var(XYZ, 2);
        let two = Poly::constant(XYZ, 2);
        [&(&x * &x) + &(&y * &y), &two * &(&x * &y), &two * &(&z * &z)]
    };
    for i in 0..200 {
        let n = rng.gen_range(1..=4);
        let c = if i % 2 == 0 {
            random_code(&mut rng, n)
        } else {
            let pool = runs.get(n, false);
            let r = &pool[rng.gen_range(0..pool.len())];
            r.code.image(&random_element(&mut rng, n)).expect("same length")
        };
        let k = phi(&c).unwrap();
        if phi_inv(&k).unwrap() != c || k.size() != c.size() {
            fail("phi bijective");
        }
        if hamming_we(&k).unwrap() != hamming_we(&c).unwrap() {
            fail("phi keeps W");
        }
        let s = sigma(&c).unwrap();
        let p = psi(&c).unwrap();
        if s.is_self_dual() != c.is_self_dual() || p.is_self_dual() != c.is_self_dual() {
            fail("self-duality");
        }
        if c.is_even() && !(s.is_hamming_even() && p.is_even()) {
            fail("evenness");
        }
        let sc = swe(&c).unwrap();
        let w = sc.substitute(&[su.clone(), sv.clone(), sw.clone()]);
        if hamming_we(&s).unwrap() != w || hamming_we(&p).unwrap() != w {
            fail("W of sigma and psi");
        }
        if swe(&p).unwrap() != sc.substitute(&psi_sub) {
            fail("swe of psi");
        }
        if phi(&p).unwrap() != s {
            fail("phi psi = sigma");
        }
        let b = beta(&c).unwrap();
        if b.len() != 3 * n || b.dimension() != c.rank() {
            fail("beta parameters");
        }
        for _ in 0..4 {
            let x = Word::from_bits(n, rng.gen_range(0..1u64 << (2 * n))).unwrap();
            let y = Word::from_bits(n, rng.gen_range(0..1u64 << (2 * n))).unwrap();
            let bin = (beta_word(x.bits(), n) & beta_word(y.bits(), n)).count_ones() % 2;
            if x.inner(&y).unwrap() as u32 != bin {
                fail("beta scalar product");
            }
        }
    }
    let e = t.elapsed();
    check(
        failures.is_empty() && e < Duration::from_secs(60),
        format!("200 codes, failures {failures:?}, {}", within(e, Duration::from_secs(60))),
    )
}

fn invariant_ring(runs: &Runs) -> Outcome {
    let t = Instant::now();
    let mut bad = 0;
    let mut checked = 0;
    for n in 1..=6 {
        for r in runs.get(n, true) {
            checked += 1;
            if decompose_even(&r.swe).is_err() {
                bad += 1;
            }
        }
    }
    for n in 1..=5 {
        for r in runs.get(n, false) {
            checked += 1;
            if decompose_general(&r.swe).is_err() {
                bad += 1;
            }
        }
    }
    let ew = verify_ew_relation();
    let molien = molien_by_averaging(12) == molien_closed_form(12);
    let e = t.elapsed();
    check(
        bad == 0 && ew && molien && e < Duration::from_secs(60),
        format!(
            "{checked} enumerators, {bad} failed; EW relation {ew}; Molien {molien}; {}",
            within(e, Duration::from_secs(60))
        ),
    )
}

fn even_odd(runs: &Runs) -> Outcome {
    let t = Instant::now();
    let expected: Vec<LinearCode> = ["Gamma1 Xi1", "Upsilon2", "Gamma1^2", "Upsilon2"]
        .iter()
        .map(|s| canonical_code(&catalog::named(s).unwrap()).unwrap())
        .collect();
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=4 {
        match even_odd_census(runs.get(n, true), runs.get(n, false)) {
            Ok(report) => {
                ok &= report.is_ok();
                if n == 2 {
                    let mut got: Vec<LinearCode> =
                        report.pairs.iter().map(|p| p.image.clone()).collect();
                    let mut want = expected.clone();
                    got.sort();
                    want.sort();
                    ok &= got == want;
                }
                detail.push(format!("n={n}: {} pairs", report.pairs.len()));
            }
            Err(e) => {
                ok = false;
                detail.push(format!("n={n}: {e}"));
            }
        }
    }
    let e = t.elapsed();
    check(
        ok && e < Duration::from_secs(60),
        format!("{}, {}", detail.join(", "), within(e, Duration::from_secs(60))),
    )
}

fn extremal(runs: &Runs) -> Outcome {
    let expected = [(3, 1, 4), (4, 2, 4), (5, 5, 4), (6, 1, 6), (7, 2, 6)];
    let mut ok = true;
    let mut got = Vec::new();
    for (n, count, d) in expected {
        let found = extremal_records(runs.get(n, true), n, true);
        ok &= found.len() == count && found.iter().all(|r| r.min_ewt == d);
        let top = census_by_min_weight(runs.get(n, true));
        got.push(format!("n={n}:{}(d={})", found.len(), top.keys().last().copied().unwrap_or(0)));
    }
    for n in 1..=6 {
        ok &= runs
            .get(n, false)
            .iter()
            .all(|r| r.min_ewt <= extremal_bound(n, false) && r.min_ewt <= sharpened_bound(n));
    }
    for n in 1..=7 {
        ok &= runs
            .get(n, true)
            .iter()
            .all(|r| r.min_ewt <= extremal_bound(n, true));
    }
    check(ok, got.join(" "))
}

fn main() {
    let cheap: Vec<(&str, Outcome)> = vec![
        ("1 named code table", table1()),
        ("2 small self-dual class table", table3()),
    ];
    let runs = Runs::compute();
    let mut results = cheap;
    results.push(("3 classification counts", counts(&runs)));
    results.push(("4 mass formulas", masses(&runs)));
    results.push(("5 indecomposable census", indecomposables(&runs)));
    results.push(("6 hexacode markings", hexacode()));
    results.push(("7 deltaplus_3 markings", delta_plus_markings()));
    results.push(("8 MacWilliams suite", macwilliams()));
    results.push(("9 map suite", map_properties(&runs)));
    results.push(("10 invariant ring", invariant_ring(&runs)));
    results.push(("11 even/odd correspondence", even_odd(&runs)));
    results.push(("12 extremal results", extremal(&runs)));
    let mut failed = 0;
    for (name, o) in &results {
        println!("{} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
