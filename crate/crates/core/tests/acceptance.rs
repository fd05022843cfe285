//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hyparr::algebra::{q, qi, MultiPoly};
use hyparr::harness::{
    adapted_vector, lct, lct_by_bisection, multi_smc_verify, nd_check, smc_verify,
    validate_adapted,
};
use hyparr::vmono::{diag_annihilator, diag_region_samples, diag_s_eigenvalue, diag_vres_member, DiagClass};
use hyparr::walls::{
    chamber_path, extend_restricted_walls, localized_walls, separating_walls, walls_from_resolution,
    WallFamily, WallInstance, WallSet,
};
use hyparr::zeta::{
    candidate_hyperplanes, candidate_poles, local_zeta, multivariate_local_zeta, rank2_zeta, snc_zeta,
    ZetaTerm,
};
use hyparr::{fixtures, AffineForm, Rational, ZetaFunction};
use rand::Rng;

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: hyparr::Error) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let arr = fixtures::veys();
    let start = Instant::now();
    let z = local_zeta(&arr).map_err(err)?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    let poles = z.poles().pole_values();
    check(!poles.contains(&q(-1, 3)), "-1/3 is a pole")?;
    let cands = candidate_poles(&arr).map_err(err)?;
    check(cands.contains(&q(-1, 3)), "-1/3 is not a candidate")?;
    let nd = nd_check(&arr).map_err(err)?;
    check(nd.n == 3 && nd.d == 9 && nd.value == q(-1, 3), "n/d data mismatch")?;
    check(nd.candidate && !nd.pole, "n/d report disagrees")
}

fn criterion_2() -> Outcome {
    let arr = fixtures::veys();
    let roots: BTreeSet<Rational> = fixtures::veys_bf_roots().into_iter().collect();
    let poles = local_zeta(&arr).map_err(err)?.poles().pole_values();
    check(poles.iter().all(|p| roots.contains(p)), "pole outside the roots")?;
    let cands = candidate_poles(&arr).map_err(err)?;
    let expected: BTreeSet<Rational> =
        [qi(-1), q(-1, 2), q(-1, 4), q(-2, 3), q(-2, 7), q(-1, 3)].into_iter().collect();
    check(cands.iter().cloned().collect::<BTreeSet<_>>() == expected, "candidate set differs")?;
    check(cands.iter().all(|c| roots.contains(c)), "candidate outside the roots")?;
    let v = smc_verify(&arr, &fixtures::veys_bf_roots(), true).map_err(err)?;
    check(v.pass, "smc verdict failed")
}

fn agrees(z: &ZetaFunction, f: impl Fn(&Rational) -> Rational) -> bool {
    (1..20).all(|k| {
        let s = q(k, 7);
        z.eval(&[s.clone()]) == Some(f(&s))
    })
}

fn criterion_3() -> Outcome {
    let z = local_zeta(&fixtures::three_lines()).map_err(err)?;
    let expected = ZetaFunction::from_terms(
        1,
        vec![
            ZetaTerm::new(qi(8), [AffineForm::from_i64(&[3], 2)]),
            ZetaTerm::new(qi(-3), [AffineForm::from_i64(&[1], 1)]),
        ],
    )
    .map_err(err)?;
    check(z == expected, format!("xy(x-y) gave {z}"))?;
    check(
        agrees(&z, |s| (qi(2) - s) / ((qi(3) * s + qi(2)) * (s + qi(1)))),
        "xy(x-y) values differ",
    )?;
    for (a, b) in [(1, 1), (2, 3), (5, 1)] {
        let z = local_zeta(&fixtures::monomial(a, b)).map_err(err)?;
        let closed = |s: &Rational| qi(1) / ((qi(a as i64) * s + qi(1)) * (qi(b as i64) * s + qi(1)));
        check(agrees(&z, closed), format!("x^{a}y^{b} gave {z}"))?;
        check(z.denominator_degree() == 2, format!("x^{a}y^{b} denominator"))?;
    }
    let z = multivariate_local_zeta(&fixtures::split_pair()).map_err(err)?;
    let inner = AffineForm::from_i64(&[1, 1], 2);
    check(
        z.terms().iter().any(|t| t.denominators.contains(&inner)),
        "s1 + s2 + 2 never appeared",
    )?;
    check(!z.denominator().contains_key(&inner), "s1 + s2 + 2 not cancelled")?;
    check(
        z.numerator() == &MultiPoly::one(2)
            && z.denominator().keys().cloned().collect::<Vec<_>>()
                == vec![AffineForm::from_i64(&[0, 1], 1), AffineForm::from_i64(&[1, 0], 1)],
        format!("(x, y) gave {z}"),
    )
}

fn criterion_4() -> Outcome {
    let snc = [
        fixtures::boolean(1),
        fixtures::boolean(2),
        fixtures::boolean(3),
        fixtures::monomial(2, 3),
        fixtures::monomial(5, 1),
        hyparr::Arrangement::from_i64(3, &[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]], &[2, 1, 3]).unwrap(),
    ];
    for arr in &snc {
        check(
            local_zeta(arr).map_err(err)? == snc_zeta(arr).map_err(err)?,
            "snc oracle mismatch",
        )?;
    }
    let lines = common::random_line_arrangements(4, 8);
    for arr in &lines {
        check(
            local_zeta(arr).map_err(err)? == rank2_zeta(arr).map_err(err)?,
            format!("rank-two oracle mismatch on {:?}", arr.normals()),
        )?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let mut arrs: Vec<hyparr::Arrangement> =
        common::fixture_arrangements().into_iter().map(|(_, a)| a).collect();
    arrs.extend(common::random_space_arrangements(5, 10));
    for arr in &arrs {
        let cands = candidate_poles(arr).map_err(err)?;
        for p in local_zeta(arr).map_err(err)?.poles().pole_values() {
            check(cands.contains(&p), format!("pole {p} is not a candidate"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let multi = multivariate_local_zeta(&fixtures::line_and_pair()).map_err(err)?;
    let spec = multi.specialize(&[1, 1]).map_err(err)?;
    check(spec == local_zeta(&fixtures::three_lines()).map_err(err)?, "specialization differs")?;
    let polar: BTreeSet<AffineForm> = multi.poles().hyperplanes().into_iter().collect();
    let expected: BTreeSet<AffineForm> = [
        AffineForm::from_i64(&[1, 2], 2),
        AffineForm::from_i64(&[1, 0], 1),
        AffineForm::from_i64(&[0, 1], 1),
    ]
    .into_iter()
    .collect();
    check(polar == expected, format!("polar locus of {multi}"))
}

fn instance(normal: &[i64], level: i64) -> WallInstance {
    WallInstance {
        normal: normal.iter().map(|&x| x.into()).collect(),
        level: qi(level),
    }
}

fn criterion_7() -> Outcome {
    let ext = extend_restricted_walls(&walls_from_resolution(&[vec![1, 1]]).map_err(err)?).map_err(err)?;
    let expected = WallSet::from_families(
        [[1, 1], [1, 0], [0, 1]]
            .iter()
            .map(|l| WallFamily::from_i64(l, &[qi(0)]).unwrap()),
    );
    check(ext == expected, "extended families differ")?;
    let at0 = localized_walls(&ext, &[qi(0), qi(0)]).map_err(err)?;
    check(at0.len() == 3, "three walls through the origin")?;
    let half = localized_walls(&ext, &[q(1, 2), q(1, 2)]).map_err(err)?;
    check(half == vec![instance(&[1, 1], 1)], "one wall through (1/2, 1/2)")
}

fn multiset(mut v: Vec<WallInstance>) -> Vec<WallInstance> {
    v.sort();
    v
}

fn criterion_8() -> Outcome {
    let mut g = common::rng(8);
    for (name, ws) in common::fixture_wall_sets() {
        let dim = ws.dim().unwrap();
        let mut done = 0;
        while done < 100 {
            let a = common::random_point(&mut g, dim);
            let c = common::random_point(&mut g, dim);
            let off = |p: &[Rational]| localized_walls(&ws, p).map(|w| w.is_empty());
            if a == c || !off(&a).map_err(err)? || !off(&c).map_err(err)? {
                continue;
            }
            let ac = separating_walls(&ws, &a, &c).map_err(err)?;
            check(ac == separating_walls(&ws, &c, &a).map_err(err)?, format!("{name}: asymmetric"))?;
            let t = q(g.gen_range(1..40), 40);
            let b: Vec<Rational> = a.iter().zip(&c).map(|(x, y)| x + (y - x) * &t).collect();
            if off(&b).map_err(err)? {
                let mut split = separating_walls(&ws, &a, &b).map_err(err)?;
                split.extend(separating_walls(&ws, &b, &c).map_err(err)?);
                check(multiset(split) == ac, format!("{name}: segment additivity"))?;
            }
            let path = chamber_path(&ws, &a, &c).map_err(err)?;
            check(multiset(path.walls.clone()) == ac, format!("{name}: path walls"))?;
            for pair in path.waypoints().windows(2) {
                check(
                    separating_walls(&ws, &pair[0], &pair[1]).map_err(err)?.len() == 1,
                    format!("{name}: consecutive waypoints"),
                )?;
            }
            done += 1;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for arr in [fixtures::three_lines(), fixtures::veys()] {
        let beta = adapted_vector(&arr).map_err(err)?;
        check(validate_adapted(&arr, &beta).map_err(err)?.pass, "adapted vector rejected")?;
    }
    let v = validate_adapted(&fixtures::three_lines(), &[qi(1), q(1, 2), q(1, 2)]).map_err(err)?;
    check(!v.pass, "(1, 1/2, 1/2) accepted")?;
    check(
        v.witnesses.iter().any(|w| w.to_string().contains("integral sum at dense hyperplane")),
        "missing witness",
    )
}

fn criterion_10() -> Outcome {
    for (arr, expected) in [
        (fixtures::veys(), q(1, 4)),
        (fixtures::three_lines(), q(2, 3)),
        (fixtures::monomial(2, 3), q(1, 3)),
    ] {
        let c = lct(&arr).map_err(err)?;
        check(c == expected, format!("lct {c} != {expected}"))?;
        check(lct_by_bisection(&arr).map_err(err)? == c, "bisection disagrees")?;
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    check(diag_s_eigenvalue(DiagClass::new(0, 0, 1)) == qi(-1), "eigenvalue of 1/(t1-t2)")?;
    check(diag_s_eigenvalue(DiagClass::new(0, 0, 2)) == qi(0), "eigenvalue of 1/(t1-t2)^2")?;
    check(diag_s_eigenvalue(DiagClass::new(1, 0, 1)) == qi(-2), "eigenvalue of t1/(t1-t2)")?;
    for (alpha, c) in diag_region_samples() {
        check(diag_vres_member(c, &alpha), format!("{c:?} not in the region at {alpha:?}"))?;
        let deeper = DiagClass::new(c.m, c.n, c.k + 1);
        check(!diag_vres_member(deeper, &alpha), format!("{c:?} not minimal at {alpha:?}"))?;
        check(
            diag_s_eigenvalue(c) == -(Rational::from_integer(c.weight()) + qi(2)),
            "eigenvalue formula",
        )?;
    }
    let pairs = [
        ([q(1, 2), q(1, 2)], [q(3, 2), q(3, 2)]),
        ([qi(0), qi(0)], [q(1, 4), q(1, 4)]),
        ([q(1, 3), q(1, 5)], [q(7, 3), q(11, 4)]),
        ([qi(1), qi(0)], [qi(3), qi(2)]),
        ([q(5, 2), q(1, 2)], [q(5, 2), q(1, 2)]),
        ([qi(0), qi(0)], [qi(4), qi(4)]),
    ];
    for (a, b) in &pairs {
        let levels: BTreeSet<Rational> = diag_annihilator(a, b)
            .map_err(err)?
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let mut hit = BTreeSet::new();
        for m in 0..=10u64 {
            for n in 0..=10u64 {
                for k in 1..=10u64 {
                    let c = DiagClass::new(m, n, k);
                    if diag_vres_member(c, a) && !diag_vres_member(c, b) {
                        let e = -diag_s_eigenvalue(c);
                        check(levels.contains(&e), format!("{c:?} outside the annihilator"))?;
                        hit.insert(e);
                    }
                }
            }
        }
        check(hit == levels, format!("unused annihilator level between {a:?} and {b:?}"))?;
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let veys = fixtures::veys();
    check(smc_verify(&veys, &fixtures::veys_bf_roots(), true).map_err(err)?.pass, "Veys pole inclusion")?;
    let nd = nd_check(&veys).map_err(err)?;
    check(fixtures::veys_bf_roots().contains(&nd.value), "-n/d among the shipped roots")?;
    let arr = fixtures::line_and_pair();
    let locus = candidate_hyperplanes(&arr).map_err(err)?;
    check(multi_smc_verify(&arr, &locus).map_err(err)?.pass, "multivariate inclusion")?;
    let mut roots: Vec<Rational> = locus
        .iter()
        .filter_map(|f| f.specialize(&[1.into(), 1.into()]).canonical().1.root())
        .collect();
    roots.sort();
    roots.dedup();
    check(smc_verify(&fixtures::three_lines(), &roots, true).map_err(err)?.pass, "specialized inclusion")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("Veys local zeta drops the candidate -1/3", criterion_1),
        ("Veys poles and candidates are shipped roots", criterion_2),
        ("closed forms", criterion_3),
        ("normal crossings and rank-two oracles", criterion_4),
        ("poles lie among dense-edge candidates", criterion_5),
        ("multivariate specialization and polar locus", criterion_6),
        ("diagonal wall families", criterion_7),
        ("wall and chamber properties", criterion_8),
        ("adapted vectors", criterion_9),
        ("log canonical thresholds", criterion_10),
        ("diagonal V-filtration data", criterion_11),
        ("checkable inclusion directions", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
