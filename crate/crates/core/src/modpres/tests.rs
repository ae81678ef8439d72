use proptest::prelude::*;

use super::*;
use crate::config::Config;
use crate::groebner::buchberger;

fn d4() -> QRing {
    QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^2*y+x*y^2+x*y*z"]).unwrap()
}

fn cone() -> QRing {
    QuotientRing::parse(3, &["x", "y", "z"], &["z^2-x*y"]).unwrap()
}

fn e6() -> QRing {
    QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^3+y^2*z"]).unwrap()
}

fn fixture(ring: &QRing, rows: &[&[&str]]) -> RMatrix {
    RMatrix::parse(ring, rows).unwrap()
}

fn fixtures() -> Vec<RMatrix> {
    let (d, c, e) = (d4(), cone(), e6());
    vec![
        fixture(&d, &[&["z", "x*y"], &["x+y+z", "z"]]),
        fixture(&d, &[&["z", "x^2+x*y+x*z"], &["y", "z"]]),
        fixture(&c, &[&["z", "y"], &["-x", "-z"]]),
        fixture(&c, &[&["x", "y", "z"]]),
        fixture(
            &e,
            &[
                &["z", "y", "x", "0"],
                &["y*z", "z", "0", "x"],
                &["x^2", "0", "z", "y"],
                &["0", "x^2", "y*z", "z"],
            ],
        ),
    ]
}

#[derive(Clone, Debug)]
enum Op {
    SwapCols(usize, usize),
    SwapRows(usize, usize),
    ScaleCol(usize, u32),
    ScaleRow(usize, u32),
    AddCol(usize, usize, usize),
    AddRow(usize, usize, usize),
    PadZero,
}

const MULTIPLIERS: [&str; 6] = ["1", "x", "y", "z", "x*y+z", "y^2+x"];

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0..8usize, 0..8usize).prop_map(|(a, b)| Op::SwapCols(a, b)),
        (0..8usize, 0..8usize).prop_map(|(a, b)| Op::SwapRows(a, b)),
        (0..8usize, 1..3u32).prop_map(|(a, c)| Op::ScaleCol(a, c)),
        (0..8usize, 1..3u32).prop_map(|(a, c)| Op::ScaleRow(a, c)),
        (0..8usize, 0..8usize, 0..MULTIPLIERS.len()).prop_map(|(a, b, m)| Op::AddCol(a, b, m)),
        (0..8usize, 0..8usize, 0..MULTIPLIERS.len()).prop_map(|(a, b, m)| Op::AddRow(a, b, m)),
        Just(Op::PadZero),
    ]
}

/// A nonzero element of `F_p`.
fn unit(c: u32, p: u32) -> u32 {
    1 + c % (p - 1)
}

fn apply(m: &mut RMatrix, op: &Op) {
    let ring = m.ring().clone();
    let (t, s) = (m.rows(), m.cols());
    match *op {
        Op::SwapCols(a, b) if s > 0 => m.swap_cols(a % s, b % s),
        Op::SwapRows(a, b) => m.swap_rows(a % t, b % t),
        Op::ScaleCol(a, c) if s > 0 => m.scale_col(a % s, unit(c, ring.modulus())),
        Op::ScaleRow(a, c) => m.scale_row(a % t, unit(c, ring.modulus())),
        Op::AddCol(a, b, k) if s > 1 && a % s != b % s => {
            let c = ring.parse_elem(MULTIPLIERS[k]).unwrap();
            m.add_col_multiple(a % s, b % s, &c);
        }
        Op::AddRow(a, b, k) if t > 1 && a % t != b % t => {
            let c = ring.parse_elem(MULTIPLIERS[k]).unwrap();
            m.add_row_multiple(a % t, b % t, &c);
        }
        Op::PadZero if s < 8 => {
            let zero = RMatrix::zero(&ring, t, 1);
            let mut cols: Vec<Vec<_>> = (0..s).map(|j| m.col(j)).collect();
            cols.push(zero.col(0));
            *m = RMatrix::from_cols(&ring, t, cols).unwrap();
        }
        _ => {}
    }
}

fn sig(m: &RMatrix) -> InvariantSignature {
    signature(&PresentedModule::new(m.clone()), &Config::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn signature_invariant_under_elementary_ops(which in 0..5usize, ops in prop::collection::vec(op(), 20)) {
        let base = fixtures().swap_remove(which);
        let want = sig(&base);
        let mut m = base;
        for o in &ops {
            apply(&mut m, o);
        }
        prop_assert_eq!(sig(&m), want);
    }

    #[test]
    fn prune_preserves_signature(which in 0..5usize, ops in prop::collection::vec(op(), 10)) {
        let base = fixtures().swap_remove(which);
        let ring = base.ring().clone();
        // a unit summand mixed into the fixture
        let mut m = base.direct_sum(&RMatrix::parse(&ring, &[&["1"]]).unwrap()).unwrap();
        for o in &ops {
            apply(&mut m, o);
        }
        let module = PresentedModule::new(m);
        let pruned = prune(&module, &Config::default()).unwrap();
        prop_assert_eq!(sig(pruned.matrix()), sig(&base));
        prop_assert_eq!(sig(pruned.matrix()), sig(module.matrix()));
    }

    #[test]
    fn block_decompose_reassembles(a in 0..5usize, b in 0..5usize, ops in prop::collection::vec(op(), 12)) {
        let fx = fixtures();
        prop_assume!(fx[a].ring() == fx[b].ring());
        let mut m = fx[a].direct_sum(&fx[b]).unwrap();
        for o in &ops {
            apply(&mut m, o);
        }
        let cfg = Config::default();
        let pruned = prune(&PresentedModule::new(m), &cfg).unwrap();
        let blocks = block_decompose(&pruned, &cfg).unwrap();
        prop_assert_eq!(blocks.iter().map(|b| b.rows()).sum::<usize>(), pruned.rows());
        prop_assert_eq!(blocks.iter().map(|b| b.cols()).sum::<usize>(), pruned.cols());
        let sum = PresentedModule::direct_sum_all(pruned.ring(), &blocks);
        prop_assert_eq!(sig(sum.matrix()), sig(pruned.matrix()));
    }
}

#[test]
fn fitting_chain_increases() {
    let budget = crate::config::Budget::default();
    for m in fixtures() {
        let module = PresentedModule::new(m);
        let ring = module.ring().clone();
        for k in 0..module.rows() {
            let small = fitting_ideal(k, &module).unwrap();
            let big = fitting_ideal(k + 1, &module).unwrap();
            let gb = buchberger(&big.sum(ring.relations()).unwrap(), &budget).unwrap();
            for g in small.gens() {
                assert!(gb.contains(g), "Fitt_{k} not inside Fitt_{}", k + 1);
            }
        }
    }
}

#[test]
fn rank_plus_matrix_rank_is_rows() {
    let cfg = Config::default();
    for m in fixtures() {
        let module = PresentedModule::new(m.clone());
        assert_eq!(
            module_rank(&module, &cfg).unwrap() + matrix_rank(&m, &cfg).unwrap(),
            m.rows()
        );
    }
}

#[test]
fn fixture_ranks() {
    let cfg = Config::default();
    let ranks: Vec<usize> = fixtures()
        .into_iter()
        .map(|m| module_rank(&PresentedModule::new(m), &cfg).unwrap())
        .collect();
    assert_eq!(ranks, vec![1, 1, 1, 0, 2]);
}

#[test]
fn dual_pair_shares_minor_invariants() {
    // A module and its dual have transposed presentations, hence equal Fitting
    // ideals; the graded isomorphism test still separates them.
    let r = e6();
    let a2 = fixture(
        &r,
        &[
            &["x", "y^2+z", "y", "0"],
            &["z", "x^2", "0", "x*y"],
            &["0", "0", "x", "y^2+z"],
            &["0", "0", "z", "x^2"],
        ],
    );
    let a3 = a2.transpose();
    assert_eq!(sig(&a2), sig(&a3));
    let cfg = Config::default();
    let iso = graded_isomorphic(&PresentedModule::new(a2), &PresentedModule::new(a3), &cfg).unwrap();
    assert_eq!(iso, Some(false));
}
