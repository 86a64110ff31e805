//! Frozen hand-computed matrices for the paw graph (triangle 2-3-4 with the
//! pendant vertex 1; signs + - - + in edge order (1,2), (2,3), (3,4), (2,4)).

use gaussian_linalg::{GMatrix, GaussianInt};
use matrix_zoo::{build_bundle, Orientation};
use signed_graph_core::paw;

fn real(rows: &[&[i64]]) -> GMatrix {
    GMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| GaussianInt::new(v, 0)).collect())
            .collect(),
    )
    .unwrap()
}

fn complex(rows: &[&[(i64, i64)]]) -> GMatrix {
    GMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&(re, im)| GaussianInt::new(re, im)).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn paw_bundle_matches_hand_computed_matrices() {
    let g = paw();
    // Arrows 1->2, 3->2, 3->4, 2->4.
    let orientation: Orientation = "<><<".parse().unwrap();
    let b = build_bundle(&g, &orientation).unwrap();

    assert_eq!(
        b.adjacency,
        real(&[
            &[0, 1, 0, 0],
            &[1, 0, -1, 1],
            &[0, -1, 0, -1],
            &[0, 1, -1, 0],
        ]),
        "adjacency"
    );
    assert_eq!(
        b.degree,
        real(&[
            &[1, 0, 0, 0],
            &[0, 3, 0, 0],
            &[0, 0, 2, 0],
            &[0, 0, 0, 2],
        ]),
        "degree"
    );
    assert_eq!(
        b.net_degree,
        real(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -2, 0],
            &[0, 0, 0, 0],
        ]),
        "net degree"
    );
    assert_eq!(
        b.laplacian,
        real(&[
            &[1, -1, 0, 0],
            &[-1, 3, 1, -1],
            &[0, 1, 2, 1],
            &[0, -1, 1, 2],
        ]),
        "laplacian"
    );
    assert_eq!(
        b.signless_laplacian,
        real(&[
            &[1, 1, 0, 0],
            &[1, 3, -1, 1],
            &[0, -1, 2, -1],
            &[0, 1, -1, 2],
        ]),
        "signless laplacian"
    );
    assert_eq!(
        b.net_laplacian,
        real(&[
            &[1, -1, 0, 0],
            &[-1, 1, 1, -1],
            &[0, 1, -2, 1],
            &[0, -1, 1, 0],
        ]),
        "net laplacian"
    );
    assert_eq!(
        b.signless_net_laplacian,
        real(&[
            &[1, 1, 0, 0],
            &[1, 1, -1, 1],
            &[0, -1, -2, -1],
            &[0, 1, -1, 0],
        ]),
        "signless net laplacian"
    );
    assert_eq!(
        b.net_incidence,
        complex(&[
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
            &[(1, 0), (0, 1), (0, 0), (1, 0)],
            &[(0, 0), (0, 1), (0, 1), (0, 0)],
            &[(0, 0), (0, 0), (0, 1), (1, 0)],
        ]),
        "net incidence"
    );
    assert_eq!(
        b.oriented_net_incidence,
        complex(&[
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
            &[(-1, 0), (0, -1), (0, 0), (1, 0)],
            &[(0, 0), (0, 1), (0, 1), (0, 0)],
            &[(0, 0), (0, 0), (0, -1), (-1, 0)],
        ]),
        "oriented net incidence"
    );
}

#[test]
fn paw_pretty_printed_net_laplacian() {
    let g = paw();
    let b = build_bundle(&g, &Orientation::canonical(4)).unwrap();
    assert_eq!(
        gaussian_linalg::format_matrix(&b.net_laplacian),
        "[ 1 -1  0  0]\n[-1  1  1 -1]\n[ 0  1 -2  1]\n[ 0 -1  1  0]\n"
    );
    assert_eq!(
        gaussian_linalg::format_matrix(&b.net_incidence),
        "[1 0 0 0]\n[1 i 0 1]\n[0 i i 0]\n[0 0 i 1]\n"
    );
}
