//! Acceptance checks. Each test prints one `PASS` or `FAIL` line and then
//! asserts. Values marked as derived come from hand computation or from an
//! oracle written here, independent of the library code under test.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use polydendriform::clans::erosohedron_hypergraph;
use polydendriform::constructs::{count_by_nodes, enumerate, restrict_construct, tubing};
use polydendriform::encodings::{
    br_shuffle, erosohedron_counts, hypercube_decode, hypercube_encode, permutohedron_decode, permutohedron_encode,
    CubeWord, PackedWord,
};
use polydendriform::sampling::Sampler;
use polydendriform::shuffle::{
    measure, shuffle_b_linear, shuffle_b_with, shuffle_nonrecursive, shuffle_with, trio_with, QMode,
};
use polydendriform::suites::{run_suite, Report, Suite, SuiteConfig};
use polydendriform::{Construct, Delegation, Hypergraph, LinearConstruct, Mode, QPolynomial, Team, Universe, VertexSet};
use rand::Rng;

const SEED: u64 = 20240611;

fn report(criterion: u32, what: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        println!("{status} criterion {criterion}: {what}");
    } else {
        println!("{status} criterion {criterion}: {what} ({detail})");
    }
    assert!(ok, "criterion {criterion} failed: {what}: {detail}");
}

fn c(s: &str) -> Construct {
    s.parse().unwrap()
}

fn vs<const N: usize>(ids: [i64; N]) -> VertexSet {
    VertexSet::from(ids)
}

fn frieze() -> Arc<Universe> {
    Arc::new(Universe::gamma(2))
}

fn member(u: &Universe, x: &VertexSet) -> Hypergraph {
    u.member(x).unwrap()
}

/// A linear construct written as `(coefficient exponent, construct)` pairs,
/// each coefficient a single power of q.
fn q_sum(carrier: VertexSet, terms: &[(u32, &str)]) -> LinearConstruct {
    let mut l = LinearConstruct::zero(carrier);
    for &(e, t) in terms {
        l.add_term(c(t), QPolynomial::q_pow(e)).unwrap();
    }
    l
}

/// Every coefficient is exactly `q^μ` for the team's measure of the term.
fn homogeneous(team: &Team, product: &LinearConstruct) -> bool {
    product
        .terms()
        .all(|(u, p)| *p == QPolynomial::q_pow(measure(team, u).unwrap()))
}

fn suite(s: Suite, u: Universe, max: usize, samples: usize) -> Report {
    let mut cfg = SuiteConfig::new(Arc::new(u), max, SEED);
    cfg.samples = samples;
    run_suite(s, &cfg).unwrap()
}

fn summary(r: &Report) -> String {
    match &r.counterexample {
        None => format!("{} {}: {} cases", r.suite, r.universe, r.cases),
        Some(ce) => format!("{} {}: {} of {} failed, first {ce}", r.suite, r.universe, r.failures, r.cases),
    }
}

fn all_pass(criterion: u32, what: &str, reports: &[Report]) {
    let ok = reports.iter().all(Report::passed);
    let detail: Vec<String> = reports.iter().map(summary).collect();
    report(criterion, what, ok, &detail.join("; "));
}

fn frieze_rows() -> (Vec<Vec<u64>>, Duration) {
    let start = Instant::now();
    let rows = (1..=5)
        .map(|n| {
            count_by_nodes(&member(&Universe::gamma(2), &VertexSet::interval(1, n)))
                .unwrap()
                .iter()
                .map(|k| u64::try_from(k).unwrap())
                .collect()
        })
        .collect();
    (rows, start.elapsed())
}

#[test]
fn friezohedron_table() {
    let (rows, elapsed) = frieze_rows();
    // derived: a segment has one edge and two vertices, so row two is [1, 2]
    let expected: Vec<Vec<u64>> =
        vec![vec![1], vec![1, 2], vec![1, 6, 6], vec![1, 13, 33, 22], vec![1, 25, 119, 188, 94]];
    let sums: Vec<u64> = rows.iter().map(|r| r.iter().sum()).collect();
    let ok = rows == expected && sums == [1, 3, 13, 69, 427] && elapsed < Duration::from_secs(5);
    report(1, "friezohedron construct counts for n = 1..5", ok, &format!("{rows:?} in {elapsed:?}"));
}

#[test]
#[ignore = "the reference table lists row two as [1, 1]; enumeration gives [1, 2]"]
fn friezohedron_table_listed_second_row() {
    let (rows, _) = frieze_rows();
    report(1, "listed row [1, 1] with sum 2", rows[1] == [1, 1], &format!("{:?}", rows[1]));
}

fn frieze_product() -> (Team, LinearConstruct) {
    let team = Team::make(frieze(), &[vs([1, 2]), vs([3, 4])], &VertexSet::interval(1, 4), Mode::Strict).unwrap();
    let d = Delegation::new(team.clone(), vec![c("2(1)"), c("3(4)")]).unwrap();
    (team, shuffle_with(&d, QMode::Symbolic).unwrap())
}

#[test]
fn friezohedron_worked_product() {
    let (team, product) = frieze_product();
    // derived by hand from the recursion: merging 1 with 3, or 2 with 4,
    // under a single root costs one factor of q
    let expected = q_sum(
        VertexSet::interval(1, 4),
        &[
            (0, "2(1(3(4)))"),
            (0, "2(3(1,4))"),
            (1, "2(13(4))"),
            (0, "3(4(2(1)))"),
            (0, "3(2(1,4))"),
            (1, "3(24(1))"),
            (1, "23(1,4)"),
        ],
    );
    let ok = product == expected && homogeneous(&team, &product);
    report(2, "product of 2(1) and 3(4) in the friezohedron on 1..4", ok, &product.to_string());

    let whole = VertexSet::interval(4, 8);
    let inner = Team::make(frieze(), &[vs([4]), vs([5]), vs([6, 7, 8])], &whole, Mode::Strict).unwrap();
    let d2 = Delegation::new(inner, vec![c("4"), c("5"), c("678")]).unwrap();
    let sub = shuffle_b_with(&d2, &BTreeSet::from([2]), QMode::Symbolic).unwrap();
    let expected_sub = q_sum(whole, &[(0, "678(4(5))"), (0, "678(5(4))"), (1, "678(45)")]);
    report(2, "sub-sum at the 678 participant of the 8-vertex example", sub == expected_sub, &sub.to_string());

    let outer = Team::make(
        frieze(),
        &[vs([1, 3, 5]), vs([2, 4]), vs([6, 7, 8])],
        &VertexSet::interval(1, 8),
        Mode::Strict,
    )
    .unwrap();
    let d = Delegation::new(outer.clone(), vec![c("3(1,5)"), c("2(4)"), c("678")]).unwrap();
    let at_b = shuffle_b_with(&d, &BTreeSet::from([0, 1]), QMode::Symbolic).unwrap();
    let inner_product = shuffle_with(&d2, QMode::Symbolic).unwrap();
    let expected_b = polydendriform::qalgebra::graft(
        &vs([2, 3]),
        &[LinearConstruct::from_construct(c("1")), inner_product],
    )
    .unwrap();
    report(2, "summand at B = {1, 2} is 23(1, product on 4..8)", at_b == expected_b, "");
}

#[test]
#[ignore = "the reference display carries q only on 23(1,4); the definition also weights 2(13(4)) and 3(24(1))"]
fn friezohedron_worked_product_listed_display() {
    let (_, product) = frieze_product();
    let listed = q_sum(
        VertexSet::interval(1, 4),
        &[
            (0, "2(1(3(4)))"),
            (0, "2(3(1,4))"),
            (0, "2(13(4))"),
            (0, "3(4(2(1)))"),
            (0, "3(2(1,4))"),
            (0, "3(24(1))"),
            (1, "23(1,4)"),
        ],
    );
    report(2, "listed 7-term display with a single q-weighted term", product == listed, &product.to_string());
}

fn words(list: &[&[u32]]) -> BTreeSet<PackedWord> {
    list.iter().map(|w| PackedWord::new(w.to_vec()).unwrap()).collect()
}

/// Oracle: all words `hk` with letters exactly `1..=n`, `std(h) = f` and
/// `std(k) = g`, found by brute force over all words of the right length.
fn brute_shuffle(f: &[u32], g: &[u32]) -> [BTreeSet<Vec<u32>>; 3] {
    fn std(w: &[u32]) -> Vec<u32> {
        let image: Vec<u32> = w.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        w.iter().map(|x| image.binary_search(x).unwrap() as u32 + 1).collect()
    }
    let len = f.len() + g.len();
    let mut out: [BTreeSet<Vec<u32>>; 3] = Default::default();
    let mut w = vec![1u32; len];
    loop {
        let n = *w.iter().max().unwrap();
        let packed = (1..=n).all(|k| w.contains(&k));
        let (h, k) = w.split_at(f.len());
        if packed && std(h) == f && std(k) == g {
            let (mh, mk) = (h.iter().max().unwrap(), k.iter().max().unwrap());
            let slot = match mh.cmp(mk) {
                std::cmp::Ordering::Greater => 0,
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Less => 2,
            };
            out[slot].insert(w.clone());
        }
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            if w[i] < len as u32 {
                w[i] += 1;
                break;
            }
            w[i] = 1;
            i += 1;
        }
    }
}

#[test]
fn permutohedron_shuffle() {
    let (f, g) = (PackedWord::new(vec![1, 2, 1]).unwrap(), PackedWord::new(vec![2, 1]).unwrap());
    let t = br_shuffle(&f, &g);
    let prec = words(&[&[2, 3, 2, 2, 1], &[1, 3, 1, 2, 1], &[1, 4, 1, 3, 2], &[2, 4, 2, 3, 1], &[3, 4, 3, 2, 1]]);
    let dot = words(&[&[1, 2, 1, 2, 1], &[1, 3, 1, 3, 2], &[2, 3, 2, 3, 1]]);
    let succ = words(&[&[1, 2, 1, 3, 1], &[1, 2, 1, 3, 2], &[1, 2, 1, 4, 3], &[1, 3, 1, 4, 2], &[2, 3, 2, 4, 1]]);
    let brute = brute_shuffle(&[1, 2, 1], &[2, 1]);
    let as_vecs = |s: &BTreeSet<PackedWord>| -> BTreeSet<Vec<u32>> { s.iter().map(|w| w.letters().to_vec()).collect() };
    let ok = t.prec == prec
        && t.dot == dot
        && t.succ == succ
        && [as_vecs(&prec), as_vecs(&dot), as_vecs(&succ)] == brute;
    report(3, "surjection shuffle of (1,2,1) and (2,1) splits 5/3/5", ok, "");

    let (x, y, whole) = (VertexSet::interval(1, 3), VertexSet::interval(4, 5), VertexSet::interval(1, 5));
    let u = Arc::new(Universe::permutohedra());
    let team = Team::make(u, &[x.clone(), y.clone()], &whole, Mode::Strict).unwrap();
    let d = Delegation::new(
        team,
        vec![permutohedron_decode(&f, &x).unwrap(), permutohedron_decode(&g, &y).unwrap()],
    )
    .unwrap();
    let tr = trio_with(&d, QMode::Symbolic).unwrap();
    let encoded = |l: &LinearConstruct| -> BTreeMap<PackedWord, QPolynomial> {
        l.terms()
            .map(|(c, p)| (permutohedron_encode(c, &whole).unwrap(), QPolynomial::constant(p.evaluate(1))))
            .collect()
    };
    let ones = |s: &BTreeSet<PackedWord>| -> BTreeMap<PackedWord, QPolynomial> {
        s.iter().map(|w| (w.clone(), QPolynomial::one())).collect()
    };
    let ok = encoded(&tr.prec) == ones(&prec) && encoded(&tr.dot) == ones(&dot) && encoded(&tr.succ) == ones(&succ);
    report(3, "generic trio agrees with the shuffle through the permutohedron encoding", ok, "");

    let r = suite(Suite::OracleAgreement, Universe::permutohedra(), 6, 100);
    all_pass(3, "word shuffle and trio agree on all pairs up to 6 letters", &[r]);
}

#[test]
fn recursive_matches_nonrecursive() {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut inhomogeneous = 0;
    for u in [Universe::gamma(1), Universe::gamma(2), Universe::permutohedra()] {
        let mut s = Sampler::new(Arc::new(u.clone()), SEED);
        let mut done = 0;
        while done < 70 {
            let size = s.rng().random_range(2..=7);
            let arity = s.rng().random_range(2..=size.min(4));
            let Some(team) = s.team(size, arity, Mode::Strict) else { continue };
            let d = s.delegation(&team);
            let a = shuffle_with(&d, QMode::Symbolic).unwrap();
            let b = shuffle_nonrecursive(&d).unwrap();
            if a != b {
                mismatches.push(format!("{u}: {:?}", d.constructs()));
            }
            if !homogeneous(&team, &a) {
                inhomogeneous += 1;
            }
            done += 1;
            checked += 1;
        }
    }
    let ok = checked >= 200 && mismatches.is_empty() && inhomogeneous == 0;
    report(
        4,
        "recursive and restriction-based products agree",
        ok,
        &format!("{checked} delegations, {} mismatches", mismatches.len()),
    );

    let team = Team::make(frieze(), &[vs([1, 3, 5]), vs([2, 4])], &VertexSet::interval(1, 5), Mode::Strict).unwrap();
    let mu = measure(&team, &c("3(14(2,5))")).unwrap();
    report(4, "measure of 3(14(2,5)) is 1", mu == 1, &format!("{mu}"));
}

#[test]
fn strict_associativity() {
    let reports: Vec<Report> = [Universe::gamma(1), Universe::gamma(2), Universe::gamma(3), Universe::permutohedra()]
        .into_iter()
        .map(|u| suite(Suite::StrictAssoc, u, 7, 100))
        .collect();
    let enough = reports.iter().all(|r| r.cases >= 100);
    all_pass(5, "associativity at symbolic q on 100 graftings per restrictohedron", &reports);
    assert!(enough);

    let reports: Vec<Report> = [Universe::gamma(1), Universe::gamma(2), Universe::gamma(3), Universe::permutohedra()]
        .into_iter()
        .map(|u| suite(Suite::Polydendriform, u, 6, 100))
        .collect();
    all_pass(5, "polydendriform equation for every nonempty B''", &reports);
}

#[test]
fn tridendriform_equations() {
    let reports = vec![
        suite(Suite::Tridendriform, Universe::gamma(1), 5, 100),
        suite(Suite::Tridendriform, Universe::gamma(2), 5, 100),
        suite(Suite::Tridendriform, Universe::permutohedra(), 6, 100),
    ];
    all_pass(6, "seven tridendriform equations at symbolic q", &reports);
}

#[test]
fn semi_strict_regime() {
    let u = Arc::new(Universe::Simplex);
    let whole = VertexSet::interval(1, 3);
    let inner = Team::make(u.clone(), &[vs([2]), vs([3])], &vs([2, 3]), Mode::SemiStrict).unwrap();
    let outer = Team::make(u.clone(), &[vs([1]), vs([2, 3])], &whole, Mode::SemiStrict).unwrap();
    let flat = Team::make(u, &[vs([1]), vs([2]), vs([3])], &whole, Mode::SemiStrict).unwrap();
    let y23 = shuffle_with(&Delegation::new(inner, vec![c("2"), c("3")]).unwrap(), QMode::Symbolic).unwrap();
    let y1 = LinearConstruct::from_construct(c("1"));
    let nested = shuffle_b_linear(&outer, &[y1.clone(), y23], &BTreeSet::from([0]), QMode::Symbolic).unwrap();
    let two_plus_q = QPolynomial::from_terms([(0, 2.into()), (1, 1.into())]);
    let expected = LinearConstruct::term(c("1(2,3)"), two_plus_q);
    let flat_b = shuffle_b_with(
        &Delegation::new(flat, vec![c("1"), c("2"), c("3")]).unwrap(),
        &BTreeSet::from([0]),
        QMode::Symbolic,
    )
    .unwrap();
    let ok = nested == expected
        && flat_b == LinearConstruct::from_construct(c("1(2,3)"))
        && nested.evaluate_q(-1) == flat_b
        && nested.evaluate_q(1) != flat_b;
    report(7, "simplex witness gives (2+q) times the Y1 term", ok, &nested.to_string());

    let reports: Vec<Report> = [Universe::Simplex, Universe::Hypercube, Universe::Erosohedron]
        .into_iter()
        .map(|u| suite(Suite::SemistrictAssoc, u, 6, 100))
        .collect();
    let enough = reports.iter().all(|r| r.cases >= 100);
    all_pass(7, "associativity at q = -1 on 100 graftings per semi-strict universe", &reports);
    assert!(enough);

    let reports: Vec<Report> = [Universe::Simplex, Universe::Hypercube, Universe::Erosohedron]
        .into_iter()
        .map(|u| suite(Suite::CoeffSum, u, 6, 100))
        .collect();
    all_pass(7, "coefficients of semi-strict products sum to 1", &reports);
}

#[test]
fn strictness_criterion() {
    let reports: Vec<Report> = [
        Universe::gamma(1),
        Universe::gamma(2),
        Universe::gamma(3),
        Universe::permutohedra(),
        Universe::Simplex,
        Universe::Hypercube,
        Universe::Erosohedron,
    ]
    .into_iter()
    .map(|u| suite(Suite::StrictnessLemma, u, 5, 100))
    .collect();
    all_pass(8, "edge criterion for strictness matches the definition on all teams", &reports);
}

#[test]
fn tubing_restriction() {
    let l = member(&Universe::gamma(2), &VertexSet::interval(1, 5));
    let h = member(&Universe::gamma(2), &vs([1, 3, 5]));
    let s = c("3(14(2,5))");
    let r = restrict_construct(&s, &l, &h).unwrap();
    report(9, "3(14(2,5)) restricts to 3(1,5)", r == c("3(1,5)"), &r.to_string());
    let psi = tubing(&s);
    let expected = BTreeSet::from([VertexSet::interval(1, 5), vs([1, 2, 4, 5]), vs([5]), vs([2])]);
    let shown: Vec<String> = psi.iter().map(ToString::to_string).collect();
    report(9, "tubing of 3(14(2,5))", psi == expected, &shown.join(" "));

    let r = suite(Suite::TubingLemma, Universe::gamma(2), 6, 100);
    all_pass(9, "tubing identity on all friezohedron triples up to 6 vertices", &[r]);
}

#[test]
fn counts_and_bijections() {
    let mut ok = true;
    for m in 1..=7 {
        let x = VertexSet::interval(1, m);
        ok &= enumerate(&member(&Universe::Simplex, &x)).unwrap().len() == (1 << m) - 1;
    }
    report(10, "simplex faces number 2^m - 1 for m up to 7", ok, "");

    let mut ok = true;
    for m in 1..=7 {
        let x = VertexSet::interval(1, m);
        let faces = enumerate(&member(&Universe::Hypercube, &x)).unwrap();
        ok &= faces.len() == 3usize.pow(m as u32 - 1);
        for f in &faces {
            let w: CubeWord = hypercube_encode(f, &x).unwrap();
            ok &= hypercube_decode(&w, &x).unwrap() == *f;
        }
    }
    report(10, "hypercube faces number 3^(m-1) and words round trip", ok, "");

    let listed = ["+-+", "+++", "+--", "++-", "+.+", "+-.", "++.", "+.-", "+.."];
    let x = VertexSet::interval(1, 3);
    let faces: BTreeSet<Construct> = enumerate(&member(&Universe::Hypercube, &x)).unwrap().into_iter().collect();
    let decoded: BTreeSet<Construct> =
        listed.iter().map(|w| hypercube_decode(&w.parse().unwrap(), &x).unwrap()).collect();
    let round = listed
        .iter()
        .all(|w| hypercube_encode(&hypercube_decode(&w.parse().unwrap(), &x).unwrap(), &x).unwrap().to_string() == *w);
    report(10, "the nine words of the square", decoded == faces && round, "");

    let mut ok = true;
    let mut detail = Vec::new();
    for m in 2..=7usize {
        let by_nodes = count_by_nodes(&erosohedron_hypergraph(&VertexSet::interval(1, m as i64))).unwrap();
        let total: BigUint = by_nodes.iter().sum();
        // oracle: vertices (m-1)m, k-faces (m-k) C(m, k+1), and a face of
        // dimension k is a construct with m - k nodes
        let binom = |n: usize, k: usize| -> u64 { (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64) };
        let mut by_dim = vec![0u64; m];
        by_dim[0] = ((m - 1) * m) as u64;
        for (k, slot) in by_dim.iter_mut().enumerate().skip(1) {
            *slot = (m - k) as u64 * binom(m, k + 1);
        }
        let expected_total = (1u64 << (m - 1)) * (m as u64 + 2) - 2 * m as u64 - 1;
        let enumerated: Vec<u64> = (0..m).map(|k| u64::try_from(&by_nodes[m - 1 - k]).unwrap()).collect();
        let f = erosohedron_counts(m as u32);
        let formula: Vec<u64> = f.faces_by_dim.iter().map(|k| u64::try_from(k).unwrap()).collect();
        ok &= enumerated == by_dim && formula == by_dim && u64::try_from(&total).unwrap() == expected_total;
        ok &= u64::try_from(&f.total).unwrap() == expected_total;
        detail.push(format!("m={m}: {total}"));
        if m == 3 {
            ok &= total == BigUint::from(13u32);
        }
        if m == 4 {
            ok &= total == BigUint::from(39u32);
        }
    }
    report(10, "erosohedron counts match formulas and enumeration", ok, &detail.join(", "));
}

#[test]
fn homogeneity() {
    let (team, product) = frieze_product();
    let mut ok = homogeneous(&team, &product);
    let mut checked = 1;
    for u in [Universe::gamma(1), Universe::gamma(2), Universe::gamma(3), Universe::permutohedra()] {
        let mut s = Sampler::new(Arc::new(u), SEED + 1);
        for _ in 0..50 {
            let size = s.rng().random_range(2..=6);
            let arity = s.rng().random_range(2..=size.min(4));
            let Some(team) = s.team(size, arity, Mode::Strict) else { continue };
            let d = s.delegation(&team);
            ok &= homogeneous(&team, &shuffle_with(&d, QMode::Symbolic).unwrap());
            checked += 1;
        }
    }
    report(11, "every strict coefficient is q to the measure", ok, &format!("{checked} products"));
}
