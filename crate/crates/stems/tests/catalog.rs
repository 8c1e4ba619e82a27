//! Consistency of the stems catalog: internal validation, agreement with the
//! independently computed Adams spectral sequence, and the recorded bracket
//! and extension facts.

use grp3::FinAbelian3Group;
use stems::{pi_j, Catalog, ProductValue, SignStatus};

#[test]
fn catalog_validates_cleanly() {
    let report = Catalog::bundled().validate_catalog();
    assert!(report.is_empty(), "violations:\n{}", report.join("\n"));
}

/// The catalog's groups for stems 0..=35 agree with the output of the Adams
/// spectral sequence pipeline, which computes them from the Lambda-algebra
/// Ext groups and the bundled differentials — an entirely independent route.
#[test]
fn catalog_matches_adams_spectral_sequence() {
    let cat = Catalog::bundled();
    let computed = steenrod::adams::run_adams_ss().expect("spectral sequence runs");
    for n in 0..=35u32 {
        let expected = cat.pi_cl(n).unwrap();
        assert_eq!(
            computed[n as usize],
            expected,
            "stem {}: spectral sequence gives {}, catalog records {}",
            n,
            computed[n as usize].display(),
            expected.display()
        );
    }
}

#[test]
fn image_of_j_is_a_summand_of_every_stem() {
    let cat = Catalog::bundled();
    for n in 0..=stems::MAX_STEM {
        let j = pi_j(n);
        let cl = cat.pi_cl(n).unwrap();
        assert!(j.free_rank <= cl.free_rank, "stem {}", n);
        let mut remaining = cl.cyclic.clone();
        for e in &j.cyclic {
            let pos = remaining
                .iter()
                .position(|r| r == e)
                .unwrap_or_else(|| panic!("stem {}: Z/3^{} not a summand", n, e));
            remaining.remove(pos);
        }
    }
}

#[test]
fn landmark_stems() {
    let cat = Catalog::bundled();
    assert_eq!(cat.pi_cl(0).unwrap(), FinAbelian3Group::free(1));
    assert_eq!(cat.pi_cl(3).unwrap(), FinAbelian3Group::cyclic(1));
    assert_eq!(cat.pi_cl(4).unwrap(), FinAbelian3Group::zero());
    assert_eq!(cat.pi_cl(11).unwrap(), FinAbelian3Group::cyclic(2));
    assert_eq!(
        cat.pi_cl(23).unwrap(),
        FinAbelian3Group::new(0, vec![2, 1])
    );
    assert_eq!(cat.pi_cl(35).unwrap(), FinAbelian3Group::cyclic(3));
}

#[test]
fn recorded_bracket_facts() {
    let cat = Catalog::bundled();

    let alpha2 = cat.bracket_lookup(&["alpha1", "alpha1", "3"]).unwrap();
    assert_eq!(alpha2.value.as_deref(), Some("alpha2"));
    assert_eq!((alpha2.coeff, alpha2.sign), (1, SignStatus::Exact));

    let beta1 = cat.bracket_lookup(&["alpha1", "alpha1", "alpha1"]).unwrap();
    assert_eq!(beta1.value.as_deref(), Some("beta1"));

    let x37 = cat.bracket_lookup(&["beta1^3", "alpha1", "alpha1"]).unwrap();
    assert_eq!(x37.value.as_deref(), Some("x37"));

    // The order-9 choice: three nonzero values, recorded as such.
    let abar3 = cat.bracket_lookup(&["alpha2", "alpha1", "3"]).unwrap();
    assert_eq!(abar3.value.as_deref(), Some("alphabar3"));
    assert_eq!(abar3.sign, SignStatus::Choice);

    // A vanishing bracket and absence are different answers.
    let zero = cat.bracket_lookup(&["3", "alpha1", "alpha3"]).unwrap();
    assert_eq!(zero.value, None);
    assert!(cat.bracket_lookup(&["beta1", "beta1", "beta1"]).is_none());
}

#[test]
fn alpha1_extensions_including_hidden_ones() {
    let cat = Catalog::bundled();
    assert_eq!(
        cat.hidden_alpha1_extension("x37").unwrap(),
        ProductValue::Class {
            coeff: -1,
            name: "beta1^4".into(),
            hidden: true
        }
    );
    assert_eq!(
        cat.hidden_alpha1_extension("beta1").unwrap(),
        ProductValue::Class {
            coeff: 1,
            name: "beta1alpha1".into(),
            hidden: false
        }
    );
    assert_eq!(
        cat.hidden_alpha1_extension("alpha2").unwrap(),
        ProductValue::Zero
    );
}

/// The α-family arithmetic of the ladder brackets: each α_{n} has order 3 and
/// stem 4n−1, each ᾱ_{3k} has order 3^{ord₃(3k)+1}, and the recorded ladder
/// steps raise the stem by 4.
#[test]
fn alpha_ladder_arithmetic() {
    let cat = Catalog::bundled();
    for (lower, upper) in [
        ("alpha1", "alpha2"),
        ("alpha4", "alpha5"),
        ("alphabar6", "alpha7"),
        ("alpha7", "alpha8"),
        ("alphabar9", "alpha10"),
    ] {
        let fact = cat.bracket_lookup(&[lower, "alpha1", "3"]).unwrap();
        assert_eq!(fact.value.as_deref(), Some(upper), "ladder step {}", lower);
        let lo = cat.class(lower).unwrap();
        let hi = cat.class(upper).unwrap();
        assert_eq!(hi.stem, lo.stem + 4);
        assert_eq!(hi.order_exp, 1);
    }
}
