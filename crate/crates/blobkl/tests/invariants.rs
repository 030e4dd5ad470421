//! Cross-module invariants on seeded random instances: the combinatorial
//! statements tying tableau enumeration, dominance order and the alcove
//! picture together.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use blobkl::alcove::{hyperplane_sequence, is_regular, same_orbit, std_count, w_of};
use blobkl::tableaux::{
    enumerate_std_same_residue, BlobParams, OneColMultipartition, DEFAULT_ENUM_CAP,
};

fn random_instance(rng: &mut ChaCha8Rng) -> (BlobParams, OneColMultipartition) {
    loop {
        let level = [2usize, 3, 4][rng.random_range(0..3)];
        let e = rng.random_range(2 * level as i64..=12);
        let mut kappa: Vec<i64> = (0..level).map(|_| rng.random_range(0..e)).collect();
        kappa.sort_unstable();
        kappa.dedup();
        if kappa.len() != level {
            continue;
        }
        let Ok(params) = BlobParams::new(e, kappa) else { continue };
        let n = rng.random_range(level..=30usize);
        let mut cuts: Vec<usize> = (0..level - 1).map(|_| rng.random_range(0..=n)).collect();
        cuts.sort_unstable();
        cuts.insert(0, 0);
        cuts.push(n);
        let lam = OneColMultipartition::new(cuts.windows(2).map(|w| w[1] - w[0]).collect());
        if is_regular(&lam, &params).unwrap() {
            return (params, lam);
        }
    }
}

/// All shapes of the same size over the instance's level.
fn all_shapes(level: usize, n: usize) -> Vec<OneColMultipartition> {
    fn go(level: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<OneColMultipartition>) {
        if level == 1 {
            prefix.push(n);
            out.push(OneColMultipartition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=n {
            prefix.push(a);
            go(level - 1, n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(level, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn emptiness_orbit_dominance_and_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0usize;
    while checked < 40 {
        let (params, lam) = random_instance(&mut rng);
        let r = hyperplane_sequence(&lam, &params).unwrap().len();
        if r > 8 {
            continue; // keep the shape scan cheap
        }
        checked += 1;

        let tableaux = enumerate_std_same_residue(&lam, &params, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(tableaux.len() as u128, 1u128 << r, "count is 2^r for {lam}");
        assert_eq!(std_count(&lam, &params).unwrap(), 1u128 << r);

        let mut reached: Vec<OneColMultipartition> = tableaux.iter().map(|t| t.shape()).collect();
        reached.sort();
        reached.dedup();

        let w_lam = w_of(&lam, &params).unwrap();
        for mu in all_shapes(params.level(), lam.size()) {
            let nonempty = reached.binary_search(&mu).is_ok();
            // reachability is exactly orbit membership plus Bruhat order
            let in_orbit = same_orbit(&lam, &mu, &params).unwrap();
            let below = in_orbit && w_of(&mu, &params).unwrap().bruhat_leq(&w_lam);
            assert_eq!(nonempty, below, "{lam} vs {mu}");
            // a reachable shape dominates the truncation shape
            if nonempty {
                assert!(lam.dominance_leq(&mu).unwrap(), "{lam} not below {mu}");
            }
        }

        // dominance refines the reversed Bruhat order on the reached shapes
        for a in &reached {
            for b in &reached {
                let wa = w_of(a, &params).unwrap();
                let wb = w_of(b, &params).unwrap();
                if wb.bruhat_leq(&wa) {
                    assert!(a.dominance_leq(b).unwrap(), "{a} should be below {b}");
                }
            }
        }
    }
}
