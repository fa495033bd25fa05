//! Acceptance suite. One line per criterion; exits nonzero if any fails.
//!
//! All comparisons are exact (rational equality); each criterion also
//! carries a wall-clock bound.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chromsym::basis::{
    express_in_x_basis, resynthesize, transition_matrix, verify_basis, x_basis_element, GraphFamily,
};
use chromsym::chromatic::{build_contraction_lattice, coloring_oracle, mobius_expansion, subset_expansion};
use chromsym::closed_forms::{x_complete, x_cycle, x_path, x_star, NamedFamily};
use chromsym::{partitions_of, Basis, Coeff, Graph, Limits, Partition, SymFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn p(terms: &[(i64, &[usize])]) -> SymFunc {
    SymFunc::from_terms(
        terms[0].1.iter().sum(),
        Basis::P,
        terms.iter().map(|(c, l)| (part(l), Coeff::from_integer((*c).into()))),
    )
    .unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_family() -> GraphFamily {
    GraphFamily::custom(
        "worked",
        vec![
            Graph::complete(1).unwrap(),
            Graph::complete(2).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
        ],
    )
    .unwrap()
}

fn family_corpus(max_n: usize) -> Vec<Graph> {
    NamedFamily::ALL
        .iter()
        .flat_map(|f| (1..=max_n).map(move |n| f.graph(n).unwrap()))
        .collect()
}

fn golden_vectors() -> Outcome {
    let fam = worked_family();
    let limits = Limits::default();
    let expected = [
        (part(&[4]), p(&[(-2, &[4]), (4, &[3, 1]), (1, &[2, 2]), (-4, &[2, 1, 1]), (1, &[1, 1, 1, 1])])),
        (part(&[3, 1]), p(&[(2, &[3, 1]), (-3, &[2, 1, 1]), (1, &[1, 1, 1, 1])])),
        (part(&[2, 2]), p(&[(1, &[2, 2]), (-2, &[2, 1, 1]), (1, &[1, 1, 1, 1])])),
        (part(&[2, 1, 1]), p(&[(-1, &[2, 1, 1]), (1, &[1, 1, 1, 1])])),
        (part(&[1, 1, 1, 1]), p(&[(1, &[1, 1, 1, 1])])),
    ];
    for (lambda, want) in &expected {
        let got = x_basis_element(&fam, lambda, &limits).map_err(|e| e.to_string())?;
        ensure(&got == want, || format!("X_G{lambda} = {got}, expected {want}"))?;
    }
    Ok("5 expansions equal coefficient for coefficient".into())
}

fn subset_vs_mobius() -> Outcome {
    let limits = Limits::default();
    let corpus: Vec<Graph> = common::connected_corpus(5).into_iter().chain(family_corpus(6)).collect();
    for g in &corpus {
        let a = subset_expansion(g, &limits).map_err(|e| e.to_string())?;
        let b = mobius_expansion(g, &limits).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{g:?}: subset {a} vs Möbius {b}"))?;
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn coloring_agreement() -> Outcome {
    let limits = Limits::default();
    let corpus: Vec<Graph> = common::connected_corpus(5).into_iter().chain(family_corpus(6)).collect();
    for g in &corpus {
        let n = g.vertex_count();
        let x = subset_expansion(g, &limits).map_err(|e| e.to_string())?;
        let truncated = x.truncate(n).map_err(|e| e.to_string())?;
        let oracle = coloring_oracle(g, n, &limits).map_err(|e| e.to_string())?;
        ensure(truncated == oracle, || format!("{g:?}: {truncated} vs {oracle}"))?;
    }
    Ok(format!("{} graphs, k = |V|", corpus.len()))
}

fn closed_forms() -> Outcome {
    // K_8 has 28 edges; the subset cap is configuration, raised here.
    let limits = Limits { subset_edges: 28, ..Limits::default() };
    let mut compared = 0;
    for n in 1..=8 {
        let cases: Vec<(&str, SymFunc, Graph)> = {
            let mut v = vec![
                ("complete", x_complete(n), Graph::complete(n)),
                ("star", x_star(n), Graph::star(n)),
                ("path", x_path(n), Graph::path(n)),
            ];
            if n >= 2 {
                v.push(("cycle", x_cycle(n), Graph::cycle(n)));
            }
            v.into_iter().map(|(name, x, g)| (name, x.unwrap(), g.unwrap())).collect()
        };
        for (name, closed, g) in cases {
            let direct = subset_expansion(&g, &limits).map_err(|e| e.to_string())?;
            ensure(closed == direct, || format!("{name} n={n}: {closed} vs {direct}"))?;
            compared += 1;
        }
        let factorial: i64 = (1..=n as i64).product();
        let e = x_complete(n).unwrap().convert(Basis::E).map_err(|e| e.to_string())?;
        let want = SymFunc::e_monomial(Partition::row(n)).scale(&Coeff::from_integer(factorial.into()));
        ensure(e == want, || format!("X_K{n} in e is {e}"))?;
    }
    Ok(format!("{compared} closed forms; X_Kn = n! e_n for n ≤ 8"))
}

fn families() -> Vec<GraphFamily> {
    NamedFamily::ALL.into_iter().map(GraphFamily::named).collect()
}

fn triangular_bases() -> Outcome {
    let limits = Limits::default();
    let mut round_trips = 0;
    for fam in families() {
        for n in 1..=7 {
            let m = transition_matrix(&fam, n, &limits).map_err(|e| format!("{} n={n}: {e}", fam.name()))?;
            ensure(m.is_triangular(), || format!("{} n={n}: not triangular", fam.name()))?;
            ensure(m.diagonal().iter().all(|c| *c != Coeff::from_integer(0.into())), || {
                format!("{} n={n}: zero diagonal", fam.name())
            })?;
            for mu in partitions_of(n) {
                let f = SymFunc::p_monomial(mu.clone());
                let d = express_in_x_basis(&f, &fam, &limits).map_err(|e| e.to_string())?;
                let back = resynthesize(&d, n, &fam, &limits).map_err(|e| e.to_string())?;
                ensure(back == f, || format!("{} p{mu} came back as {back}", fam.name()))?;
                round_trips += 1;
            }
            if n <= 6 {
                for (i, lambda) in m.index().iter().enumerate() {
                    let g = chromsym::basis::family_graph(&fam, lambda).unwrap();
                    let lattice = build_contraction_lattice(&g, &limits).map_err(|e| e.to_string())?;
                    let top = lattice.find(&g.components()).ok_or("component partition missing")?;
                    let mobius = Coeff::from_integer(top.mobius.into());
                    ensure(mobius == m.rows()[i][i], || {
                        format!("{} {lambda}: μ = {mobius}, c = {}", fam.name(), m.rows()[i][i])
                    })?;
                }
            }
        }
    }
    Ok(format!("4 families, n ≤ 7; {round_trips} exact round trips"))
}

fn half_e2() -> Outcome {
    let fam = GraphFamily::named(NamedFamily::Complete);
    let e2 = SymFunc::e_monomial(part(&[2])).to_power_sum().map_err(|e| e.to_string())?;
    let d = express_in_x_basis(&e2, &fam, &Limits::default()).map_err(|e| e.to_string())?;
    let want = BTreeMap::from([(part(&[2]), Coeff::new(1.into(), 2.into()))]);
    ensure(d == want, || format!("got {d:?}"))?;
    Ok("e_2 = 1/2 X_G(2)".into())
}

fn schur() -> Outcome {
    for n in 1..=5 {
        let v = x_complete(n).unwrap().is_schur_positive().map_err(|e| e.to_string())?;
        ensure(v.positive, || format!("X_K{n}: {}", v.describe()))?;
    }
    let v = x_star(4).unwrap().is_schur_positive().map_err(|e| e.to_string())?;
    let (mu, c) = v.witness.clone().ok_or("X_S4 reported positive")?;
    ensure(!v.positive && c < Coeff::from_integer(0.into()) && v.expansion.coeff(&mu) == c, || {
        format!("inconsistent witness {mu} {c}")
    })?;
    Ok(format!("X_Kn positive for n ≤ 5; X_S4 {}", v.describe()))
}

fn product_law() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for trial in 0..50 {
        let a = rng.gen_range(1..=7);
        let b = rng.gen_range(1..=8 - a);
        let g = common::random_graph(&mut rng, a, 0.5);
        let h = common::random_graph(&mut rng, b, 0.5);
        let joint = subset_expansion(&Graph::disjoint_union(&[g.clone(), h.clone()]), &limits)
            .map_err(|e| e.to_string())?;
        let xg = subset_expansion(&g, &limits).map_err(|e| e.to_string())?;
        let xh = subset_expansion(&h, &limits).map_err(|e| e.to_string())?;
        let product = xg.mul(&xh).map_err(|e| e.to_string())?;
        ensure(joint == product, || format!("pair {trial}: {g:?} ⊔ {h:?}"))?;
    }
    Ok("50 seeded pairs, |V| ≤ 8".into())
}

fn determinism() -> Outcome {
    let run = |workers: usize| -> Result<String, String> {
        let limits = Limits::default().with_workers(workers);
        let mut reports = Vec::new();
        for fam in families() {
            for n in 1..=7 {
                reports.push(verify_basis(&fam, n, &limits).map_err(|e| e.to_string())?);
            }
        }
        ensure(reports.iter().all(|r| r.passed), || "a report failed".into())?;
        serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())
    };
    let reference = run(1)?;
    for workers in [2, 4] {
        ensure(run(workers)? == reference, || format!("{workers} workers differ from 1"))?;
    }
    Ok(format!("{} bytes identical for 1, 2, 4 workers", reference.len()))
}

fn main() -> ExitCode {
    #[allow(clippy::type_complexity)]
    let criteria: [(u32, &str, u64, fn() -> Outcome); 9] = [
        (1, "worked-family golden vectors", 1, golden_vectors),
        (2, "subset expansion = Möbius expansion", 120, subset_vs_mobius),
        (3, "truncation = coloring oracle", 300, coloring_agreement),
        (4, "closed forms and X_Kn = n! e_n", 60, closed_forms),
        (5, "triangular bases, round trips, diagonal Möbius", 300, triangular_bases),
        (6, "e_2 in the edge basis", 1, half_e2),
        (7, "Schur positivity verdicts", 5, schur),
        (8, "product law on random pairs", 60, product_law),
        (9, "reports byte-identical across worker counts", 300, determinism),
    ];
    let mut failed = 0;
    for (id, name, bound, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(bound) => {
                Err(format!("{detail}, but took {elapsed:.2?} > {bound} s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({elapsed:.2?}, bound {bound} s, exact)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
