//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use patwilf::core::mobius::{mobius_lr_closed, mobius_poset_oracle, mobius_product_closed};
use patwilf::core::oracle::{avoiders, st_polys_brute};
use patwilf::core::perm::{avoids, transpose, D4Element};
use patwilf::core::recursion::st_poly_rec_sequence;
use patwilf::core::stats::{find_dagger_violation, inv_combiner, maj};
use patwilf::core::wilf::{check_equiv, search_nontrivial, trivial_witness};
use patwilf::core::{CanonicalPatternSet, MemoTable, Permutation, QPolynomial, Statistic};
use patwilf::{Error, StatRegistry};

/// A criterion either holds as stated, or its stated identity is false and
/// a verified replacement is reported in its place.
enum Outcome {
    Pass(String),
    Deviation(String),
}

impl From<String> for Outcome {
    fn from(s: String) -> Self {
        Outcome::Pass(s)
    }
}

type Check = Result<Outcome, String>;
type Criterion = (&'static str, fn() -> Check);

fn pass(detail: impl Into<String>) -> Check {
    Ok(Outcome::Pass(detail.into()))
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn pats(list: &[&str]) -> Vec<Permutation> {
    list.iter().map(|s| p(s)).collect()
}

fn inv_sequence(list: &[&str], max_n: usize) -> Vec<QPolynomial> {
    let set = CanonicalPatternSet::new(pats(list)).unwrap();
    st_poly_rec_sequence(max_n, &set, &Statistic::inv(), MemoTable::new()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample_patterns() -> Vec<Permutation> {
    let p312 = [p("312")];
    let mut sample: Vec<Permutation> = (1..=4)
        .flat_map(|n| avoiders(n, &p312).unwrap())
        .collect();
    let mut fives = pats(&["32415", "24315", "13542", "14352"]);
    for sigma in avoiders(5, &p312).unwrap().into_iter().step_by(5) {
        if fives.len() == 12 {
            break;
        }
        if !fives.contains(&sigma) {
            fives.push(sigma);
        }
    }
    sample.extend(fives);
    sample
}

fn oracle_equivalence() -> Check {
    let sample = sample_patterns();
    let p312 = p("312");
    ensure(sample.iter().all(|s| avoids(s, &p312)), || "sample contains a 312-containing pattern".into())?;
    let mut subsets: Vec<Vec<Permutation>> = vec![vec![]];
    for (i, a) in sample.iter().enumerate() {
        subsets.push(vec![a.clone()]);
        for b in &sample[i + 1..] {
            subsets.push(vec![a.clone(), b.clone()]);
        }
    }
    let stats = [Statistic::inv(), Statistic::des(), Statistic::c213()];
    let refs: Vec<&Statistic> = stats.iter().collect();
    let mut memo = MemoTable::new();
    let max_n = 9;
    for t in &subsets {
        let mut full = vec![p312.clone()];
        full.extend(t.iter().cloned());
        let set = CanonicalPatternSet::new(full.clone()).map_err(|e| e.to_string())?;
        let rec: Vec<Vec<QPolynomial>> = stats
            .iter()
            .map(|s| st_poly_rec_sequence(max_n, &set, s, &mut memo).unwrap())
            .collect();
        for n in 0..=max_n {
            let brute = st_polys_brute(n, &full, &refs).unwrap();
            for ((stat, r), b) in stats.iter().zip(&rec).zip(&brute) {
                ensure(&r[n] == b, || format!("{} on {full:?} at n={n}: {} vs {b}", stat.name(), r[n]))?;
            }
        }
    }
    pass(format!(
        "{} patterns, {} sets, 3 statistics, n <= {max_n}",
        sample.len(),
        subsets.len()
    ))
}

fn q_catalan() -> Check {
    let want = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    let got: Vec<BigInt> = inv_sequence(&["312"], 9).iter().map(QPolynomial::eval_at_one).collect();
    let want: Vec<BigInt> = want.iter().map(|&c| c.into()).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    pass("Catalan numbers for n = 0..9")
}

fn odd_fibonacci() -> Check {
    let f = inv_sequence(&["312", "1432"], 10);
    let counts: Vec<BigInt> = f[..8].iter().map(QPolynomial::eval_at_one).collect();
    let want: Vec<BigInt> = [1u64, 1, 2, 5, 13, 34, 89, 233].iter().map(|&c| c.into()).collect();
    ensure(counts == want, || format!("counts {counts:?}"))?;
    let one_plus_q = QPolynomial::from_i64s(&[1, 1]);
    for n in 1..=9usize {
        let mut rhs = f[n].shift(n);
        for (k, fk) in f.iter().enumerate().take(n) {
            rhs += &(&one_plus_q.pow((n - k - 1) as u32) * fk).shift(k);
        }
        ensure(f[n + 1] == rhs, || format!("recurrence fails at n={n}"))?;
    }
    pass("counts 1..233 and q-recurrence for n <= 9")
}

fn two_to_the_n_minus_n() -> Check {
    let set = ["312", "2314", "2143"];
    let a = inv_sequence(&set, 10);
    let inv = Statistic::inv();
    for (n, poly) in a.iter().enumerate() {
        let brute = st_polys_brute(n, &pats(&set), &[&inv]).unwrap().remove(0);
        ensure(*poly == brute, || format!("recursion and brute force differ at n={n}"))?;
    }
    for (n, poly) in a.iter().enumerate().skip(1) {
        let want = BigInt::from((1u64 << n) - n as u64);
        ensure(poly.eval_at_one() == want, || format!("n={n}: {}", poly.eval_at_one()))?;
    }
    let boundary = |n: usize| &(&QPolynomial::one() + &QPolynomial::monomial(n)) * &a[n];
    // as stated: (1 + q^n) a_n + q (1 + q + ... + q^(n-2))
    let stated_fails_at = (1..=9usize).find(|&n| a[n + 1] != boundary(n) + QPolynomial::geometric(n - 1).shift(1));
    // F_k(312, 12, 2143) is q^C(k,2), not 1
    for n in 1..=9usize {
        let mut rhs = boundary(n);
        for k in 1..n {
            rhs += &QPolynomial::monomial(k * (k + 1) / 2);
        }
        ensure(a[n + 1] == rhs, || format!("corrected recurrence fails at n={n}"))?;
    }
    let counts = "2^n - n for n = 1..10, recursion = brute force for n <= 10";
    Ok(match stated_fails_at {
        None => format!("{counts}; q-recurrence for n <= 9").into(),
        Some(n) => Outcome::Deviation(format!(
            "{counts}; stated q-recurrence (1+q^n)a_n + q[n-1]_q is false, first at n={n}: \
             a_{} = {} but it predicts {}; verified instead \
             a_(n+1) = (1+q^n)a_n + sum_(k=1)^(n-1) q^(k(k+1)/2) for n <= 9 (same values at q=1)",
            n + 1,
            a[n + 1],
            boundary(n) + QPolynomial::geometric(n - 1).shift(1),
        )),
    })
}

fn nontrivial_pair() -> Check {
    let inv = Statistic::inv();
    let left = pats(&["312", "32415"]);
    let right = pats(&["312", "24315"]);
    let report = check_equiv(&left, &right, &inv, 10, MemoTable::new()).map_err(|e| e.to_string())?;
    ensure(report.verdict.is_equivalent(), || report.verdict.to_string())?;
    ensure(report.per_n.iter().all(|r| r.left == r.right), || "per-n mismatch".into())?;
    ensure(trivial_witness(&left, &right, &inv).is_none(), || "unexpected symmetry witness".into())?;
    pass(format!("{{312,32415}} vs {{312,24315}}: {}, no symmetry witness", report.verdict))
}

fn mobius_closed_forms() -> Check {
    for r in 1..=6 {
        let (c, o) = (mobius_lr_closed(r), mobius_poset_oracle(&[r]));
        ensure(c == o, || format!("r={r}: {c:?} vs {o:?}"))?;
    }
    let mut vectors: Vec<Vec<usize>> = vec![vec![]];
    let mut checked = 0;
    for _ in 0..3 {
        vectors = vectors
            .iter()
            .flat_map(|v| {
                (1..=4).map(move |r| {
                    let mut w = v.clone();
                    w.push(r);
                    w
                })
            })
            .collect();
        for v in &vectors {
            let (c, o) = (mobius_product_closed(v), mobius_poset_oracle(v));
            ensure(c == o, || format!("{v:?}: {c:?} vs {o:?}"))?;
            checked += 1;
        }
    }
    pass(format!("single ranks 1..6 and {checked} rank vectors"))
}

fn dagger() -> Check {
    for stat in [Statistic::inv(), Statistic::des(), Statistic::c213()] {
        ensure(find_dagger_violation(&stat, 8).is_none(), || format!("{} fails", stat.name()))?;
    }
    let registry = StatRegistry::default();
    match registry.register(Statistic::unchecked("maj-candidate", maj, inv_combiner)) {
        Err(Error::NotAdditive { violation, .. }) => pass(format!(
            "inv, des, c213 pass at n_max = 8; maj rejected: {violation}"
        )),
        other => Err(format!("maj registration: {other:?}")),
    }
}

fn d4_inversions() -> Check {
    let inv = Statistic::inv();
    for n in 0..=7usize {
        let total = n * n.saturating_sub(1) / 2;
        for sigma in Permutation::all(n) {
            let i = inv.eval(&sigma);
            for g in D4Element::ALL {
                let want = if D4Element::INV_PRESERVING.contains(&g) { i } else { total - i };
                let got = inv.eval(&g.apply(&sigma));
                ensure(got == want, || format!("{g} on {sigma}: {got} vs {want}"))?;
            }
        }
    }
    pass("all eight symmetries, n <= 7")
}

fn transpose_descents() -> Check {
    let des = Statistic::des();
    let p312 = [p("312")];
    for n in 0..=8 {
        for sigma in avoiders(n, &p312).unwrap() {
            ensure(des.eval(&transpose(&sigma)) == des.eval(&sigma), || format!("{sigma}"))?;
        }
    }
    let counter = (0..=5)
        .flat_map(Permutation::all)
        .find(|s| des.eval(&transpose(s)) != des.eval(s))
        .ok_or("no counterexample in S_n for n <= 5")?;
    pass(format!(
        "holds on 312-avoiders n <= 8; fails for {counter}: des {} vs {}",
        des.eval(&counter),
        des.eval(&transpose(&counter))
    ))
}

fn corollary_soundness() -> Check {
    let inv = Statistic::inv();
    let hits = search_nontrivial(&inv, 5, 2, 9, MemoTable::new()).map_err(|e| e.to_string())?;
    ensure(!hits.is_empty(), || "search found nothing".into())?;
    for hit in &hits {
        let (l, r) = (&hit.report.left, &hit.report.right);
        let report = check_equiv(l, r, &inv, 9, MemoTable::new()).map_err(|e| e.to_string())?;
        ensure(report.verdict.is_equivalent() && report.trivial_witness.is_none(), || {
            format!("{l:?} vs {r:?}: {}", report.verdict)
        })?;
    }
    let (a, b) = (p("32415"), p("24315"));
    let found = hits.iter().any(|h| {
        h.constructions
            .iter()
            .any(|(x, y)| (x == &a && y == &b) || (x == &b && y == &a))
    });
    ensure(found, || "(32415, 24315) not among the constructions".into())?;
    pass(format!("{} classes, all nontrivially equivalent; (32415, 24315) included", hits.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("q-Catalan counts", q_catalan),
        ("odd Fibonacci class", odd_fibonacci),
        ("2^n - n class", two_to_the_n_minus_n),
        ("nontrivial pair {312,32415} / {312,24315}", nontrivial_pair),
        ("Moebius closed forms", mobius_closed_forms),
        ("additivity verification", dagger),
        ("symmetries and inversions", d4_inversions),
        ("transpose preserves descents on 312-avoiders", transpose_descents),
        ("search soundness", corollary_soundness),
    ];
    let (mut failed, mut deviations) = (0, 0);
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Outcome::Pass(detail)) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Ok(Outcome::Deviation(detail)) => {
                deviations += 1;
                println!("DEVIATION {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {deviations} deviation(s), {failed} failed",
        criteria.len() - failed - deviations
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
