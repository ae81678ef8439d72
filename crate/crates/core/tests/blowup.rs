use fblow_core::blowup::{charts, fblowup, rees, smooth_check, villamayor_ideal, FractionalIdealRep};
use fblow_core::modpres::{PresentedModule, QuotientRing, RMatrix};
use fblow_core::Config;

fn surface(p: u32, rel: &str) -> fblow_core::modpres::QRing {
    QuotientRing::parse(p, &["x", "y", "z"], &[rel]).unwrap()
}

#[test]
fn d4_f_blowup_has_a_singular_chart() {
    let rep = fblowup(&surface(2, "z^2+x^2*y+x*y^2+x*y*z"), 1, &Config::default()).unwrap();
    assert!(rep.is_complete(), "{:?}", rep.status);
    assert_eq!(rep.rank, Some(4));
    assert_eq!(rep.kunz, Some(true));
    assert!(rep.charts.len() >= 3);
    assert!(rep
        .rees
        .as_ref()
        .unwrap()
        .substitution_holds(&Config::default())
        .unwrap());
    let smooth: Vec<bool> = rep.charts.iter().map(|c| c.smooth.as_ref().unwrap().smooth).collect();
    eprintln!("charts smooth: {smooth:?}");
    assert!(smooth.contains(&false));
}

#[test]
fn non_f_pure_e6_tilde_resolves() {
    let rep = fblowup(&surface(2, "y^2*z+y*z^2+x^3"), 1, &Config::default()).unwrap();
    assert!(rep.is_complete(), "{:?}", rep.status);
    assert_eq!(rep.kunz, Some(true));
    for c in &rep.charts {
        assert!(c.smooth.as_ref().unwrap().smooth, "chart {}", c.index);
    }
}

fn profile(ideal: &FractionalIdealRep, cfg: &Config) -> Vec<(bool, Option<usize>)> {
    let rp = rees(ideal, cfg).unwrap();
    let mut out: Vec<_> = charts(&rp, cfg)
        .unwrap()
        .iter()
        .map(|c| {
            let s = smooth_check(c, cfg).unwrap();
            (s.smooth, s.singular_dim)
        })
        .collect();
    out.sort();
    out
}

/// Generators made monic and sorted, so that equal lists give equal Rees ideals.
fn canonical(ideal: &FractionalIdealRep) -> FractionalIdealRep {
    let mut gens: Vec<_> = ideal.generators().iter().map(|g| g.monic()).collect();
    gens.sort_by_key(|g| g.to_string());
    gens.dedup();
    FractionalIdealRep::new(ideal.ring(), gens).unwrap()
}

#[test]
fn villamayor_ideal_survives_column_permutations() {
    let cfg = Config::default();
    let d4 = surface(2, "z^2+x^2*y+x*y^2+x*y*z");
    let e6 = surface(2, "z^2+x^3+y^2*z");
    let fixtures = [
        RMatrix::parse(&d4, &[&["z", "x+y+z"], &["x*y", "z"]]).unwrap(),
        RMatrix::parse(&d4, &[&["z", "y"], &["x^2+x*y+x*z", "z"]]).unwrap(),
        RMatrix::parse(
            &e6,
            &[&["z", "y", "x", "0"], &["y*z", "z", "0", "x"], &["x^2", "0", "z", "y"], &["0", "x^2", "y*z", "z"]],
        )
        .unwrap(),
    ];
    for m in fixtures {
        let cols: Vec<usize> = (0..m.cols()).rev().collect();
        let a = canonical(&villamayor_ideal(&PresentedModule::new(m.clone()), &cfg).unwrap());
        let b = canonical(&villamayor_ideal(&PresentedModule::new(m.select_cols(&cols)), &cfg).unwrap());
        if a.generators() == b.generators() {
            assert_eq!(rees(&a, &cfg).unwrap().ideal(), rees(&b, &cfg).unwrap().ideal());
        } else {
            assert_eq!(profile(&a, &cfg), profile(&b, &cfg));
        }
    }
}
