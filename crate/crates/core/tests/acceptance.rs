//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All tolerances are exact (integer
//! equality); runtime budgets are listed per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torus_atlas::covers::{
    classify_covers_up_to_iso, enumerate_covers, minimal_cover_with_orbits, semiregular_cover_mm,
    CoverDescriptor,
};
use torus_atlas::lattice::{sigma, Mat2};
use torus_atlas::oracle::{
    automorphism_group, brute_force_cover_census, orbit_count_oracle, quotient_flag_graph,
};
use torus_atlas::tiling::{atlas, plane_flag_orbits, TilingType};
use torus_atlas::torus::{maps_of_index, ToroidalMap};

use TilingType::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn maps_up_to(t: TilingType, max_index: u64) -> impl Iterator<Item = ToroidalMap> {
    (1..=max_index).flat_map(move |n| maps_of_index(t, n))
}

/// Flag-orbit counts of the plane tilings.
fn plane_table() -> Outcome {
    let expected = [
        (Triangular, 1),
        (Square, 1),
        (Hexagonal, 1),
        (ElongatedTriangular, 5),
        (SnubSquare, 5),
        (TruncatedSquare, 3),
        (Trihexagonal, 2),
        (TruncatedHexagonal, 3),
        (Rhombitrihexagonal, 4),
        (SnubHexagonal, 10),
        (TruncatedTrihexagonal, 6),
    ];
    let mut bad = Vec::new();
    for (t, want) in expected {
        let got = plane_flag_orbits(&atlas(t).tiling);
        if got != want {
            bad.push(format!("{t}: got {got}, want {want}"));
        }
    }
    if bad.is_empty() {
        pass("all 11 types match")
    } else {
        fail(bad.join("; "))
    }
}

const STATED_BOUNDS: [(TilingType, usize); 11] = [
    (Triangular, 6),
    (Square, 4),
    (Hexagonal, 6),
    (ElongatedTriangular, 10),
    (SnubSquare, 10),
    (TruncatedSquare, 12),
    (Trihexagonal, 12),
    (TruncatedHexagonal, 18),
    (Rhombitrihexagonal, 24),
    (SnubHexagonal, 30),
    (TruncatedTrihexagonal, 36),
];

/// Maximum orbit count over all lattices of index <= 36 against the stated
/// upper bounds; the bound must be attained for [3^6] and [4^4].
fn orbit_bounds() -> Outcome {
    let mut maxima = Vec::new();
    let mut bad = Vec::new();
    for (t, bound) in STATED_BOUNDS {
        let (max, witness) = maps_up_to(t, 36)
            .map(|x| (x.orbit_count(), x.hnf()))
            .max_by_key(|(k, h)| (*k, std::cmp::Reverse((h.index(), h.dba_key()))))
            .unwrap();
        maxima.push(format!("{t}={max}"));
        if max > bound {
            bad.push(format!(
                "{t}: max {max} at K={witness} exceeds stated bound {bound}"
            ));
        }
        if matches!(t, Triangular | Square) && max != bound {
            bad.push(format!("{t}: max {max} does not attain {bound}"));
        }
    }
    let summary = format!("maxima {}", maxima.join(" "));
    if bad.is_empty() {
        pass(summary)
    } else {
        fail(format!("{}; {summary}", bad.join("; ")))
    }
}

/// K = <alpha^5, beta^3> on [3^6].
fn sharpness_witness() -> Outcome {
    let x = ToroidalMap::from_matrix(Triangular, Mat2::diag(5, 3)).unwrap();
    let ps: BTreeSet<Mat2> = x.surviving_symmetries().iter().map(|g| g.p).collect();
    let want = BTreeSet::from([Mat2::IDENTITY, Mat2::scalar(-1)]);
    let k = x.orbit_count();
    if ps == want && k == 6 {
        pass("surviving point classes {I, -I}, 6 orbits")
    } else {
        fail(format!("surviving {ps:?}, {k} orbits"))
    }
}

/// Achieved orbit counts up to index 30 for [3^6] and [4^4].
fn realizable_sets() -> Outcome {
    let achieved = |t| {
        maps_up_to(t, 30)
            .map(|x| x.orbit_count())
            .collect::<BTreeSet<_>>()
    };
    let tri = achieved(Triangular);
    let sq = achieved(Square);
    let detail = format!("[3^6] {tri:?}, [4^4] {sq:?}");
    if tri == BTreeSet::from([1, 2, 3, 6]) && sq == BTreeSet::from([1, 2, 4]) {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// Cover counts equal sigma(n) and the brute-force census.
fn sigma_census() -> Outcome {
    let x = ToroidalMap::unit(Triangular);
    for n in 1..=24u64 {
        let covers = enumerate_covers(&x, n).unwrap();
        let distinct: BTreeSet<_> = covers.iter().map(|c| c.cover().hnf().dba_key()).collect();
        if covers.len() as u64 != sigma(n) || distinct.len() != covers.len() {
            return fail(format!(
                "n={n}: {} covers ({} distinct), sigma={}",
                covers.len(),
                distinct.len(),
                sigma(n)
            ));
        }
        if n <= 12 {
            let census = brute_force_cover_census(n).unwrap();
            if census != sigma(n) {
                return fail(format!("n={n}: census {census} != sigma {}", sigma(n)));
            }
        }
    }
    pass("n = 1..24 enumerated, census agrees for n = 1..12")
}

/// Random (base, cover) pairs: covers never gain orbits.
fn monotonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut violations = Vec::new();
    for _ in 0..200 {
        let t = TilingType::ALL[rng.gen_range(0..11)];
        let bases = maps_of_index(t, rng.gen_range(1..=6));
        let x = bases[rng.gen_range(0..bases.len())];
        let covers = enumerate_covers(&x, rng.gen_range(1..=6)).unwrap();
        let c = covers[rng.gen_range(0..covers.len())];
        if c.orbit_count() > x.orbit_count() {
            violations.push((x, c));
        }
    }
    let Some((x, c)) = violations.first() else {
        return pass("200 sampled pairs");
    };
    // Confirm the first violation independently of the normalizer model.
    let base = orbit_count_oracle(&quotient_flag_graph(x));
    let cover = orbit_count_oracle(&quotient_flag_graph(&c.cover()));
    fail(format!(
        "{} of 200 pairs have more orbits than their base; e.g. {} K={} ({base} orbits) covered by K S={} ({cover} orbits, confirmed by brute force)",
        violations.len(),
        x.ttype(),
        x.hnf(),
        c.cover().hnf()
    ))
}

/// The m^2-sheeted cover and the minimal cover with the plane orbit count.
fn semiregular_covers() -> Outcome {
    let mut mm_wrong = Vec::new();
    let mut min_bad = Vec::new();
    let mut bases = 0;
    for t in TilingType::ALL {
        let plane = atlas(t).plane_orbits;
        for x in maps_up_to(t, 12) {
            bases += 1;
            let m = x.sheets();
            let mm = semiregular_cover_mm(&x);
            if mm.sheets() != m * m {
                min_bad.push(format!(
                    "{t} K={}: mm cover has {} sheets",
                    x.hnf(),
                    mm.sheets()
                ));
            }
            let k = mm.orbit_count();
            if k != plane {
                mm_wrong.push(format!("{t} K={} -> {k}", x.hnf()));
            }
            match minimal_cover_with_orbits(&x, plane, None).unwrap() {
                None => min_bad.push(format!("{t} K={}: no cover with {plane} orbits", x.hnf())),
                Some(c) if c.sheets() > m * m => min_bad.push(format!(
                    "{t} K={}: minimal cover has {} sheets",
                    x.hnf(),
                    c.sheets()
                )),
                Some(c) => {
                    let at_min: Vec<CoverDescriptor> = enumerate_covers(&x, c.sheets())
                        .unwrap()
                        .into_iter()
                        .filter(|d| d.orbit_count() == plane)
                        .collect();
                    let classes = classify_covers_up_to_iso(&at_min).unwrap().class_count();
                    if classes != 1 {
                        min_bad.push(format!(
                            "{t} K={}: {classes} non-isomorphic minimal covers at {} sheets",
                            x.hnf(),
                            c.sheets()
                        ));
                    }
                }
            }
        }
    }
    let summary = format!(
        "{bases} bases; minimal cover found and unique in {} of them; S = mI cover reaches the plane count in {} of them",
        bases - min_bad.len(),
        bases - mm_wrong.len()
    );
    if mm_wrong.is_empty() && min_bad.is_empty() {
        pass(summary)
    } else {
        let mut examples: Vec<String> = min_bad.iter().take(3).cloned().collect();
        examples.extend(mm_wrong.iter().take(3).cloned());
        fail(format!("{summary}; e.g. {}", examples.join(", ")))
    }
}

fn oracle_corpus() -> Vec<ToroidalMap> {
    let mut corpus: Vec<ToroidalMap> = TilingType::ALL
        .iter()
        .flat_map(|&t| maps_up_to(t, 8))
        .collect();
    corpus.push(ToroidalMap::from_matrix(Triangular, Mat2::diag(5, 3)).unwrap());
    for t in [Triangular, Square] {
        corpus.extend(maps_of_index(t, 15));
        corpus.extend(maps_of_index(t, 16));
    }
    corpus
}

/// Normalizer model against brute-force automorphism groups.
fn oracle_equivalence() -> Outcome {
    let corpus = oracle_corpus();
    for x in &corpus {
        let cm = quotient_flag_graph(x);
        let aut = automorphism_group(&cm).len() as u64;
        let model = x.surviving_symmetries().len() as u64 * x.sheets();
        let (geo, brute) = (x.orbit_count(), orbit_count_oracle(&cm));
        if geo != brute || aut != model {
            return fail(format!(
                "{} K={}: orbits {geo} vs {brute}, |Aut| {aut} vs {model}",
                x.ttype(),
                x.hnf()
            ));
        }
    }
    pass(format!("{} maps agree", corpus.len()))
}

/// Orbit counts over lattices where the hat map has the maximal count.
fn hat_multipliers() -> Outcome {
    // (type, value stated for the type when the hat map has 6 resp. 4 orbits)
    let stated = [
        (Rhombitrihexagonal, 24),
        (TruncatedHexagonal, 18),
        (TruncatedTrihexagonal, 36),
        (Trihexagonal, 24),
        (SnubHexagonal, 30),
        (SnubSquare, 20),
        (TruncatedSquare, 12),
    ];
    // Known tension: for 3.6.3.6 the stated value is 24, but a torus map has
    // at most |flags per cell| / |{I, -I}| = 24 / 2 = 12 orbits.
    let tension = [(Trihexagonal, 12)];
    let mut bad = Vec::new();
    let mut logged = Vec::new();
    let mut cases = 0;
    for (t, want) in stated {
        let hat_max = if t.hat_type().unwrap() == Triangular {
            6
        } else {
            4
        };
        for x in maps_up_to(t, 12) {
            if x.associated_equivelar().unwrap().orbit_count() != hat_max {
                continue;
            }
            cases += 1;
            let got = x.orbit_count();
            match tension.iter().find(|(tt, _)| *tt == t) {
                Some(&(_, computed)) => {
                    if got != computed {
                        bad.push(format!(
                            "{t} K={}: {got}, expected computed value {computed}",
                            x.hnf()
                        ));
                    } else if !logged
                        .iter()
                        .any(|l: &String| l.starts_with(&t.to_string()))
                    {
                        logged.push(format!("{t}: computed {got} where {want} is stated"));
                    }
                }
                None if got != want => bad.push(format!("{t} K={}: {got}, stated {want}", x.hnf())),
                None => {}
            }
        }
    }
    if bad.is_empty() {
        pass(format!(
            "{cases} lattices checked; known tension logged: {}",
            logged.join("; ")
        ))
    } else {
        fail(bad.join("; "))
    }
}

/// Euler characteristic, flag count and involution structure on the corpus.
fn structural_invariants() -> Outcome {
    let corpus = oracle_corpus();
    for x in &corpus {
        let c = x.counts();
        // Construction validates the involutions and (s0 s2)^2 = id.
        let cm = quotient_flag_graph(x);
        let s0s2 = |f: usize| cm.s(0)[cm.s(2)[f] as usize] as usize;
        let square_ok = (0..cm.len()).all(|f| s0s2(s0s2(f)) == f);
        let combinatorial = (
            cm.vertex_count() as u64,
            cm.edge_count() as u64,
            cm.face_count() as u64,
            cm.len() as u64,
        );
        if c.euler_characteristic() != 0
            || c.flags != 4 * c.edges
            || combinatorial != (c.vertices, c.edges, c.faces, c.flags)
            || cm.euler_characteristic() != 0
            || !square_ok
        {
            return fail(format!(
                "{} K={}: counts {c:?} vs flag graph {combinatorial:?}",
                x.ttype(),
                x.hnf()
            ));
        }
    }
    pass(format!("{} maps", corpus.len()))
}

/// Isomorphism classes among the sigma(n) covers, recorded rather than
/// asserted equal to sigma(n).
fn iso_class_census() -> Outcome {
    let mut rows = Vec::new();
    for t in TilingType::ALL {
        let x = ToroidalMap::unit(t);
        let mut counts = Vec::new();
        for n in 1..=6u64 {
            let covers = enumerate_covers(&x, n).unwrap();
            let a = classify_covers_up_to_iso(&covers).unwrap();
            let b = classify_covers_up_to_iso(&covers).unwrap();
            if a != b || a.class_count() as u64 > sigma(n) {
                return fail(format!("{t} n={n}: {} classes", a.class_count()));
            }
            counts.push(a.class_count().to_string());
        }
        rows.push(format!("{t}:{}", counts.join(",")));
    }
    pass(format!(
        "classes for n=1..6 (sigma = 1,3,4,7,6,12): {}",
        rows.join(" ")
    ))
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, &str, Check, u64); 11] = [
        ("1", "plane flag-orbit table", plane_table, 1),
        ("2", "orbit bounds over index <= 36", orbit_bounds, 120),
        ("3", "diag(5,3) sharpness witness", sharpness_witness, 1),
        (
            "4",
            "realizable orbit counts to index 30",
            realizable_sets,
            60,
        ),
        ("5", "sigma(n) cover census", sigma_census, 30),
        ("6", "orbit monotonicity under covers", monotonicity, 60),
        (
            "7",
            "m^2 cover and minimal semiregular cover",
            semiregular_covers,
            300,
        ),
        ("8", "oracle equivalence", oracle_equivalence, 300),
        ("9", "hat-map orbit multipliers", hat_multipliers, 60),
        ("10", "structural invariants", structural_invariants, 60),
        (
            "note",
            "isomorphism classes of covers",
            iso_class_census,
            60,
        ),
    ];
    let mut failed = 0;
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let mut out = check();
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(budget) {
            out = fail(format!(
                "{} (took {elapsed:.2?}, budget {budget} s)",
                out.detail
            ));
        }
        let status = if out.ok { "PASS" } else { "FAIL" };
        if !out.ok {
            failed += 1;
        }
        println!("{status} [{id}] {name}: {} ({elapsed:.2?})", out.detail);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
