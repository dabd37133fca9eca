mod common;

use cactus_flags::axioms::{axiom_holds, check_axiom, check_glue, theta_squared, triangle_of, AxiomReport, PENTAGON_CYCLE};
use cactus_flags::mutation::{flip_transport, transport_along};
use cactus_flags::polygon::{assemble, glue_check};
use cactus_flags::reconstruct::{flags_to_charts, random_positive};
use cactus_flags::{ChartPoint, Triangulation};
use common::{s, square_m2};

#[test]
fn all_axioms_pass_for_small_m() {
    for m in 2..=4 {
        for k in 1..=8 {
            let r = check_axiom(k, m, 8, 13).unwrap();
            assert!(r.passed(), "axiom {k}, m = {m}: {r:?}");
        }
        assert!(check_glue(m, 8, 13).unwrap().passed());
    }
}

#[test]
fn axiom_seven_hundred_trials() {
    let r = check_axiom(7, 2, 100, 0).unwrap();
    assert_eq!((r.trials, r.passes), (100, 100));
}

#[test]
fn pentagon_all_ones_by_hand() {
    // by hand: Δ35 = 2, Δ25 = (2+1)/1 = 3, Δ24 = (1+3)/2 = 2, Δ14 = (1+2)/3 = 1, Δ13 = (1+1)/2 = 1
    let p = ChartPoint::ones(Triangulation::fan(5, 1).unwrap(), 2).unwrap();
    let mut cur = p.clone();
    let mut created = Vec::new();
    for (i, d) in PENTAGON_CYCLE.iter().enumerate() {
        let t = cur.triangulation().clone();
        cur = flip_transport(&cur, *d).unwrap();
        let e = t.opposite_diagonal(d.0, d.1).unwrap();
        let key = cactus_flags::MultiIndex::from_weights(5, &[(e.0 - 1, 1), (e.1 - 1, 1)]);
        created.push(cur.value(&key).unwrap().clone());
        assert!(i < 4 || cur == p);
    }
    assert_eq!(created, vec![s(2), s(3), s(2), s(1), s(1)]);
    assert_eq!(transport_along(&p, &PENTAGON_CYCLE).unwrap(), p);
}

#[test]
fn boundary_values_survive_a_flip_bitwise() {
    let c = random_positive(4, 3, 3, 20).unwrap();
    let p = flags_to_charts(&c, &Triangulation::new(4, [(1, 3)]).unwrap()).unwrap();
    let q = flip_transport(&p, (1, 3)).unwrap();
    let side = |i: &cactus_flags::MultiIndex| {
        let sp = i.support();
        sp.len() == 2 && (sp[1] - sp[0] == 1 || (sp[0] == 0 && sp[1] == 3))
    };
    let before: Vec<_> = p.values().iter().filter(|(i, _)| side(i)).collect();
    let after: Vec<_> = q.values().iter().filter(|(i, _)| side(i)).collect();
    assert_eq!(before, after);
    assert_eq!(before.len(), 4 * 2);
}

#[test]
fn theta_squared_agrees_with_flag_level_reversal() {
    let c = random_positive(4, 3, 9, 20).unwrap();
    let t13 = Triangulation::new(4, [(1, 3)]).unwrap();
    let p = flags_to_charts(&c, &t13).unwrap();
    let glued = theta_squared(&p, [3, 2, 1, 4]).unwrap();
    let f = |k: usize| cactus_flags::flag::orthogonal_flag(c.flag(k)).unwrap();
    let direct = cactus_flags::Configuration::new(vec![f(2), f(1), f(0), f(3)])
        .unwrap()
        .sign_normalize()
        .unwrap();
    assert_eq!(glued, flags_to_charts(&direct, &t13).unwrap());
}

#[test]
fn glue_rejects_mismatched_edges() {
    let t = Triangulation::new(4, [(1, 3)]).unwrap();
    let c = random_positive(4, 2, 1, 20).unwrap();
    let d = random_positive(4, 2, 2, 20).unwrap();
    let good = vec![c.select(&[0, 1, 2]).unwrap(), c.select(&[0, 2, 3]).unwrap()];
    assert!(glue_check(&good, &t).unwrap());
    let bad = vec![c.select(&[0, 1, 2]).unwrap(), d.select(&[0, 2, 3]).unwrap()];
    assert!(!glue_check(&bad, &t).unwrap());
    assert!(matches!(
        assemble(&bad, &t),
        Err(cactus_flags::Error::GlueMismatch { .. })
    ));
    assert!(glue_check(&good[..1], &t).is_err());
}

#[test]
fn triangles_restrict_from_the_square_chart() {
    let c = square_m2();
    let p = flags_to_charts(&c, &Triangulation::new(4, [(1, 3)]).unwrap()).unwrap();
    let t = triangle_of(&p, [1, 3, 4]).unwrap();
    assert!(t.same_point(&c.select(&[0, 2, 3]).unwrap()));
}

#[test]
fn fixed_square_satisfies_square_axioms() {
    for k in [1, 2, 3, 8] {
        assert!(axiom_holds(k, &square_m2()).unwrap());
    }
}

#[test]
fn report_json_shape() {
    let r = check_axiom(5, 2, 3, 1).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["axiom"], "5");
    assert_eq!(v["trials"], 3);
    assert_eq!(v["passes"], 3);
    assert!(v["counterexample"].is_null());
    let back: AxiomReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
