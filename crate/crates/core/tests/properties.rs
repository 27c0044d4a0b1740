use proptest::prelude::*;

use rote_core::morphism::{Morphism, NamedMorphism};
use rote_core::properness::{is_antiproper, is_proper};
use rote_core::repetition::{is_power_free, smallest_period, Threshold};
use rote_core::structure::{f_decode, g_decode, h_decode, reencode};
use rote_core::Word;

fn word(alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..alphabet, 0..=max_len).prop_map(move |v| Word::new(v, alphabet).unwrap())
}

fn nonempty(alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..alphabet, 1..=max_len).prop_map(move |v| Word::new(v, alphabet).unwrap())
}

proptest! {
    #[test]
    fn involutions(w in word(2, 40), u in word(3, 40)) {
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.complement().unwrap().complement().unwrap(), w.clone());
        prop_assert_eq!(u.reverse().parikh(), u.parikh());
        prop_assert_eq!(u.parikh().total(), u.len());
    }

    #[test]
    fn dominance_is_a_strict_order(x in word(3, 8), y in word(3, 8), z in word(3, 8)) {
        let (px, py, pz) = (x.parikh(), y.parikh(), z.parikh());
        prop_assert!(!px.dominates(&px).unwrap());
        if px.dominates(&py).unwrap() {
            prop_assert!(x.len() > y.len());
            if py.dominates(&pz).unwrap() {
                prop_assert!(px.dominates(&pz).unwrap());
            }
        }
    }

    #[test]
    fn complexity_bounds(w in word(3, 60), n in 0usize..12) {
        let c = w.factor_complexity(n);
        if n <= w.len() {
            prop_assert!(c <= w.len() - n + 1);
            if n < w.len() {
                prop_assert!(c <= w.factor_complexity(n + 1) * 3);
            }
        }
    }

    #[test]
    fn factor_sets_commute_with_transforms(w in word(2, 50), n in 0usize..8) {
        let comp: std::collections::BTreeSet<_> =
            w.factors_of_length(n).iter().map(|f| f.complement().unwrap()).collect();
        prop_assert_eq!(w.complement().unwrap().factors_of_length(n), comp);
        let rev: std::collections::BTreeSet<_> = w.factors_of_length(n).iter().map(Word::reverse).collect();
        prop_assert_eq!(w.reverse().factors_of_length(n), rev);
    }

    #[test]
    fn smallest_period_is_least(w in nonempty(2, 30)) {
        let p = smallest_period(&w).unwrap();
        let s = w.letters();
        prop_assert!((1..=s.len()).contains(&p));
        prop_assert!((0..s.len() - p).all(|i| s[i] == s[i + p]));
        for q in 1..p {
            prop_assert!((0..s.len() - q).any(|i| s[i] != s[i + q]));
        }
    }

    #[test]
    fn power_freeness_is_transform_invariant(w in word(2, 40)) {
        let t = Threshold::FIVE_HALVES_PLUS;
        let free = is_power_free(&w, &t).is_ok();
        prop_assert_eq!(is_power_free(&w.complement().unwrap(), &t).is_ok(), free);
        prop_assert_eq!(is_power_free(&w.reverse(), &t).is_ok(), free);
    }

    #[test]
    fn power_freeness_is_factor_closed(w in word(2, 40), a in 0usize..40, b in 0usize..40) {
        let t = Threshold::new(2, 1, true).unwrap();
        if is_power_free(&w, &t).is_ok() {
            let (lo, hi) = (a.min(b).min(w.len()), a.max(b).min(w.len()));
            prop_assert!(is_power_free(&w.factor(lo..hi), &t).is_ok());
        }
    }

    #[test]
    fn composition_is_application(w in word(3, 20)) {
        let named = |m: NamedMorphism| m.morphism();
        for (outer, inner) in [
            (NamedMorphism::G, NamedMorphism::F),
            (NamedMorphism::F, NamedMorphism::H),
            (NamedMorphism::Tau, NamedMorphism::Theta),
            (NamedMorphism::SigmaInv, NamedMorphism::Sigma),
        ] {
            let c = Morphism::compose(&named(outer), &named(inner)).unwrap();
            let stepwise = named(outer).apply(&named(inner).apply(&w).unwrap()).unwrap();
            prop_assert_eq!(c.apply(&w).unwrap(), stepwise);
        }
    }

    #[test]
    fn parikh_is_linear(w in word(3, 30)) {
        for m in [NamedMorphism::F, NamedMorphism::G, NamedMorphism::H, NamedMorphism::Theta] {
            let m = m.morphism();
            let columns = m.incidence();
            let mut expected = vec![0usize; m.target_alphabet() as usize];
            for (a, &count) in w.parikh().counts().iter().enumerate() {
                for (c, e) in expected.iter_mut().enumerate() {
                    *e += count * columns[a].counts()[c];
                }
            }
            let image = m.apply(&w).unwrap();
            prop_assert_eq!(image.parikh().counts().to_vec(), expected);
        }
    }

    #[test]
    fn fixed_point_prefixes_are_stable(l1 in 0usize..300, l2 in 0usize..300) {
        let (lo, hi) = (l1.min(l2), l1.max(l2));
        for (m, seed) in [(NamedMorphism::F, 0), (NamedMorphism::Theta, 0), (NamedMorphism::H, 1), (NamedMorphism::Mu, 0)] {
            let m = m.morphism();
            prop_assert_eq!(m.iterate_prefix(seed, hi).unwrap().prefix(lo), m.iterate_prefix(seed, lo).unwrap());
        }
    }

    #[test]
    fn decoders_invert_their_morphisms(v in word(3, 40)) {
        for (m, decode) in [
            (NamedMorphism::G, g_decode as fn(&Word) -> _),
            (NamedMorphism::F, f_decode),
            (NamedMorphism::H, h_decode),
        ] {
            let m = m.morphism();
            let image = m.apply(&v).unwrap();
            let r = decode(&image).unwrap();
            prop_assert_eq!(&r.preimage, &v);
            prop_assert_eq!((r.dropped_prefix, r.truncated_suffix), (0, 0));
        }
    }

    #[test]
    fn decoding_windows_reencodes_exactly(v in word(3, 40), a in 0usize..200, b in 0usize..200) {
        for (m, decode) in [
            (NamedMorphism::G, g_decode as fn(&Word) -> _),
            (NamedMorphism::F, f_decode),
            (NamedMorphism::H, h_decode),
        ] {
            let m = m.morphism();
            let image = m.apply(&v).unwrap();
            let (lo, hi) = (a.min(b).min(image.len()), a.max(b).min(image.len()));
            let window = image.factor(lo..hi);
            // shorter windows may sit strictly inside one image
            if window.len() < m.max_image_len() {
                continue;
            }
            let r = decode(&window).unwrap();
            prop_assert!(r.dropped_prefix <= 3 && r.truncated_suffix <= 3);
            prop_assert_eq!(reencode(&m, &window, &r).unwrap(), window);
        }
    }

    #[test]
    fn antiproper_is_proper_of_reversal(u in word(3, 30)) {
        prop_assert_eq!(is_antiproper(&u).unwrap().is_some(), is_proper(&u.reverse()).unwrap().is_some());
    }

    #[test]
    fn properness_is_factor_closed(start in 0usize..400, len in 0usize..60, a in 0usize..60, b in 0usize..60) {
        let base = NamedMorphism::F.morphism().iterate_prefix(0, 500).unwrap();
        let u = base.factor(start..start + len);
        prop_assert!(is_proper(&u).unwrap().is_none());
        let (lo, hi) = (a.min(b).min(len), a.max(b).min(len));
        prop_assert!(is_proper(&u.factor(lo..hi)).unwrap().is_none());
    }
}

#[test]
fn h_images_are_reversed_f_images() {
    let f = NamedMorphism::F.morphism();
    let h = NamedMorphism::H.morphism();
    for a in 0..3 {
        assert_eq!(h.image(a), f.image(a).reverse());
    }
    let sigma = NamedMorphism::Sigma.morphism();
    let inv = NamedMorphism::SigmaInv.morphism();
    let id = Morphism::identity(3).unwrap();
    assert!(Morphism::compose(&sigma, &inv).unwrap().equal_on_letters(&id));
    assert!(Morphism::compose(&inv, &sigma).unwrap().equal_on_letters(&id));
}
