//! Checks the incremental window against an independent brute-force ACR
//! computation.

use cais_resilience_core::AcrWindow;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reference ACR series computed by direct summation: for each index, the
/// ratio of ones among the last `window_size` bits of the zero-prefixed
/// sequence. Deliberately naive; kept independent of `AcrWindow`.
fn acr_series_bruteforce(bits: &[bool], window_size: usize) -> Vec<f64> {
    (0..bits.len())
        .map(|i| {
            let start = (i + 1).saturating_sub(window_size);
            let ones = bits[start..=i].iter().filter(|&&b| b).count();
            ones as f64 / window_size as f64
        })
        .collect()
}

fn incremental_series(bits: &[bool], window_size: usize) -> Vec<f64> {
    let mut window = AcrWindow::new(window_size);
    bits.iter().map(|&b| window.push(b)).collect()
}

#[test]
fn bruteforce_matches_its_own_examples() {
    assert_eq!(
        acr_series_bruteforce(&[true, true, true], 5),
        vec![0.2, 0.4, 0.6]
    );
    assert_eq!(acr_series_bruteforce(&[], 5), Vec::<f64>::new());
    let mut bits = vec![false; 5];
    bits.extend(vec![true; 5]);
    assert_eq!(*acr_series_bruteforce(&bits, 5).last().unwrap(), 1.0);
}

#[test]
fn random_streams_agree_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let len = rng.random_range(1..=2_000);
        let window_size = rng.random_range(1..=16);
        let bits: Vec<bool> = (0..len).map(|_| rng.random()).collect();
        assert_eq!(
            incremental_series(&bits, window_size),
            acr_series_bruteforce(&bits, window_size),
        );
    }
}

proptest! {
    #[test]
    fn series_agree(bits in prop::collection::vec(any::<bool>(), 0..500), w in 1usize..10) {
        prop_assert_eq!(incremental_series(&bits, w), acr_series_bruteforce(&bits, w));
    }

    #[test]
    fn acr_is_bounded_and_quantized(bits in prop::collection::vec(any::<bool>(), 0..500), w in 1usize..10) {
        let mut window = AcrWindow::new(w);
        for b in bits {
            let acr = window.push(b);
            prop_assert!((0.0..=1.0).contains(&acr));
            let steps = acr * w as f64;
            prop_assert_eq!(steps, steps.round(), "ACR must be a multiple of 1/window_size");
        }
    }
}
