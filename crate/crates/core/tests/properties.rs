use proptest::prelude::*;

use ltab::json::{parse_filling, parse_grid, parse_pair, to_json, GridTableau};
use ltab::lprime::{binary_to_lprime, lprime_to_binary, psi, psi_preimage, Sign};
use ltab::ltab::{l_to_word, pad_to, phi, phi_inverse, truncate, word_to_l};
use ltab::rsk::{rsk_insert, rsk_inverse, Word};
use ltab::shapes::{
    contains, extensions_by_col_strip, extensions_by_row_strip, is_horizontal_strip, is_vertical_strip,
    partitions_in_box, Bounds, Partition, SkewShape,
};
use ltab::tableau::{is_ssyt, is_syt, rotate180};

fn word(max_r: u32, max_len: usize) -> impl Strategy<Value = Word> {
    (0..=max_r).prop_flat_map(move |r| {
        prop::collection::vec(0..=r, 0..=max_len).prop_map(move |letters| Word::new(letters, r).unwrap())
    })
}

fn partition_in(b: Bounds) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=b.cols, b.rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn rsk_round_trip(w in word(5, 12)) {
        let pair = rsk_insert(&w);
        prop_assert!(is_ssyt(&pair.p));
        prop_assert!(is_syt(&pair.q));
        prop_assert!(pair.p.shape().outer().len() <= w.r() as usize + 1);
        prop_assert_eq!(rsk_inverse(&pair, w.r()).unwrap(), w);
    }

    #[test]
    fn l_tableau_round_trip(w in (1..=3u32).prop_flat_map(|r| prop::collection::vec(0..=r, 0..=6).prop_map(move |l| Word::new(l, r).unwrap()))) {
        let t = word_to_l(&w).unwrap();
        prop_assert_eq!(t.d(), t.g() + t.r());
        prop_assert_eq!(l_to_word(&t).unwrap(), w);
        let purple = phi(&t.red()).unwrap();
        prop_assert_eq!(phi_inverse(&purple).unwrap(), t.red());
        let wide = pad_to(&t, t.d() + 2).unwrap();
        prop_assert_eq!(truncate(&wide).unwrap(), t);
    }

    #[test]
    fn strip_extensions_match_filter(lambda in partition_in(Bounds::new(3, 4)), k in 0usize..=4) {
        let b = Bounds::new(4, 5);
        let all = partitions_in_box(lambda.size() + k, b);
        let rows = extensions_by_row_strip(&lambda, k, b);
        let cols = extensions_by_col_strip(&lambda, k, b);
        let skew = |nu: &Partition| SkewShape::new(nu.clone(), lambda.clone()).unwrap();
        let want_rows: Vec<_> = all.iter().filter(|nu| contains(nu, &lambda) && is_horizontal_strip(&skew(nu))).cloned().collect();
        let want_cols: Vec<_> = all.iter().filter(|nu| contains(nu, &lambda) && is_vertical_strip(&skew(nu))).cloned().collect();
        prop_assert_eq!(rows, want_rows);
        prop_assert_eq!(cols, want_cols);
    }

    #[test]
    fn conjugation_swaps_strip_kinds(outer in partition_in(Bounds::new(4, 4)), inner in partition_in(Bounds::new(4, 4))) {
        prop_assume!(contains(&outer, &inner));
        let s = SkewShape::new(outer.clone(), inner.clone()).unwrap();
        let t = SkewShape::new(outer.conjugate(), inner.conjugate()).unwrap();
        prop_assert_eq!(is_horizontal_strip(&s), is_vertical_strip(&t));
    }

    #[test]
    fn json_round_trips(w in word(3, 7)) {
        let pair = rsk_insert(&w);
        prop_assert_eq!(parse_pair(&to_json(&pair)).unwrap(), pair.clone());
        let rotated = rotate180(&pair.q, Bounds::new(w.r() as usize + 1, w.len().max(1))).unwrap();
        prop_assert_eq!(parse_filling(&to_json(&rotated)).unwrap(), rotated);
        prop_assert_eq!(ltab::json::from_json::<Word>(&to_json(&w)).unwrap(), w.clone());
        if w.r() >= 1 {
            let t = GridTableau::L(word_to_l(&w).unwrap());
            prop_assert_eq!(parse_grid(&to_json(&t)).unwrap(), t);
        }
    }

    #[test]
    fn binary_round_trip(letters in prop::collection::vec(0..=1u32, 0..=6), k in 2usize..=5, extra in 0usize..=2) {
        let g = letters.len();
        let w = Word::new(letters, 1).unwrap();
        let t = binary_to_lprime(&w, g + k + extra, k).unwrap();
        prop_assert_eq!(t.sign(), Sign::Positive);
        prop_assert_eq!(lprime_to_binary(&t).unwrap(), w);
        let json = to_json(&t);
        prop_assert_eq!(parse_grid(&json).unwrap(), GridTableau::LPrime(t.clone()));
        if let Some(s) = psi_preimage(&t) {
            prop_assert_eq!(psi(&s).unwrap(), t);
        }
    }
}
