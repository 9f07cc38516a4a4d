use ksub_core::generate::{random_coverage, random_separable};
use ksub_core::{
    join, meet, precedes, validate_lattice_ksubmodular, validate_monotone, validate_orthant_submodular, Assignment,
    Exact, ExactTabular, Oracle, Space, Tabular,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Monotone table from a random nonnegative function: f(x) = max over y ⪯ x of h(y).
fn max_closure(rng: &mut impl Rng, n: usize, k: usize) -> ExactTabular {
    let space = Space::new(n, k).unwrap();
    let all: Vec<Assignment> = space.iter().collect();
    let h: Vec<i64> = (0..all.len()).map(|idx| if idx == 0 { 0 } else { rng.gen_range(0..6) }).collect();
    let values = all
        .iter()
        .map(|x| {
            let best = all.iter().zip(&h).filter(|(y, _)| precedes(y, x)).map(|(_, v)| *v).max().unwrap();
            Exact::from_integer(best)
        })
        .collect();
    ExactTabular::from_values(n, k, values).unwrap()
}

fn exact_table<O: Oracle<f64>>(o: &O) -> ExactTabular {
    let space = Space::new(o.n(), o.k()).unwrap();
    let values = space.iter().map(|s| Exact::new((o.value_of(&s) * 1000.0).round() as i64, 1000)).collect();
    ExactTabular::from_values(o.n(), o.k(), values).unwrap()
}

#[test]
fn orthant_and_lattice_agree_on_monotone_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut agreed_pass, mut agreed_fail) = (0, 0);
    for round in 0..120 {
        let (n, k) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let oracle = match round % 3 {
            0 => max_closure(&mut rng, n, k),
            1 => exact_table(&random_coverage(&mut rng, n, k)),
            _ => exact_table(&random_separable(&mut rng, n, k)),
        };
        assert!(validate_monotone(&oracle).unwrap().passed);
        let orthant = validate_orthant_submodular(&oracle).unwrap();
        let lattice = validate_lattice_ksubmodular(&oracle).unwrap();
        assert_eq!(orthant.passed, lattice.passed, "round {round}: {orthant:?} vs {lattice:?}");
        if orthant.passed {
            agreed_pass += 1;
        } else {
            agreed_fail += 1;
            assert!(orthant.witness.unwrap().recheck(&oracle).unwrap());
            assert!(lattice.witness.unwrap().recheck(&oracle).unwrap());
        }
    }
    // Both outcomes must actually occur for the agreement to mean anything.
    assert!(agreed_pass >= 40 && agreed_fail >= 10, "{agreed_pass} pass / {agreed_fail} fail");
}

#[test]
fn shipped_families_pass_all_validators_up_to_n5_k3() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 1..=5 {
        for k in 1..=3 {
            let cov = random_coverage(&mut rng, n, k);
            let sep = random_separable(&mut rng, n, k);
            for verdict in [
                validate_monotone(&cov).unwrap(),
                validate_orthant_submodular(&cov).unwrap(),
                validate_lattice_ksubmodular(&cov).unwrap(),
                validate_monotone(&sep).unwrap(),
                validate_orthant_submodular(&sep).unwrap(),
                validate_lattice_ksubmodular(&sep).unwrap(),
            ] {
                assert!(verdict.passed, "n={n} k={k}: {verdict:?}");
            }
        }
    }
}

#[test]
fn non_monotone_tables_may_disagree_but_witnesses_recheck() {
    // Outside the monotone class the two notions differ; only witness
    // soundness is required there.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let space = Space::new(3, 2).unwrap();
        let values = (0..space.len()).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let t = Tabular::from_values(3, 2, values).unwrap();
        for verdict in [validate_monotone(&t).unwrap(), validate_orthant_submodular(&t).unwrap(), validate_lattice_ksubmodular(&t).unwrap()] {
            if let Some(w) = verdict.witness {
                assert!(w.recheck(&t).unwrap());
            }
        }
    }
}

fn assignment(n: u32, k: u16) -> impl Strategy<Value = Assignment> {
    proptest::collection::vec(0..=k, n as usize).prop_map(|digits| {
        let pairs: Vec<(u32, u16)> =
            digits.iter().enumerate().filter(|(_, &d)| d > 0).map(|(a, &d)| (a as u32 + 1, d)).collect();
        Assignment::from_raw(&pairs).unwrap()
    })
}

proptest! {
    #[test]
    fn join_and_meet_are_valid_and_ordered(x in assignment(5, 3), y in assignment(5, 3)) {
        let j = join(&x, &y, 3).unwrap();
        let m = meet(&x, &y);
        prop_assert!(precedes(&m, &x) && precedes(&m, &y));
        prop_assert!(precedes(&m, &j));
        prop_assert_eq!(j.len(), j.items().count());
        prop_assert_eq!(&j, &join(&y, &x, 3).unwrap());
        // Items kept by the join are exactly those the inputs do not disagree on.
        for (a, i) in j.iter() {
            prop_assert!(x.dim_of(a).is_none_or(|d| d == i));
            prop_assert!(y.dim_of(a).is_none_or(|d| d == i));
        }
    }
}
