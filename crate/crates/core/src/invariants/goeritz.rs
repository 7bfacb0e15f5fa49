//! Goeritz matrix of a checkerboard coloring, with the determinant and the Gordon-Litherland
//! signature.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::Diagram;

/// Checkerboard colors of the faces; adjacent faces differ.
pub fn checkerboard(d: &Diagram) -> (crate::diagram::FaceStructure, Vec<bool>) {
    let fs = d.face_structure();
    let nf = fs.faces.len();
    let mut color: Vec<Option<bool>> = vec![None; nf];
    if nf > 0 {
        color[0] = Some(false);
    }
    let mut stack = vec![0usize];
    let mut adj = vec![Vec::new(); nf];
    for &[a, b] in &fs.edge_faces {
        adj[a].push(b);
        adj[b].push(a);
    }
    while let Some(f) = stack.pop() {
        let c = color[f].expect("stacked faces are colored");
        for &g in &adj[f] {
            if color[g].is_none() {
                color[g] = Some(!c);
                stack.push(g);
            }
        }
    }
    let color = color.into_iter().map(|c| c.unwrap_or(false)).collect();
    (fs, color)
}

/// Per-crossing data relative to a set of white faces.
struct CrossingData {
    white: [usize; 2],
    /// Incidence number: `+1` when the white corners are the ones swept by turning the
    /// over-strand counterclockwise.
    eta: i64,
    /// Whether the oriented smoothing joins the two white corners.
    white_joined: bool,
}

fn crossing_data(d: &Diagram, slot_face: &[usize], white: &[bool]) -> Vec<CrossingData> {
    (0..d.crossings())
        .map(|c| {
            let r = d.rotation_slots(c);
            // corner between r[k] and r[k+1] lies in the face leaving along r[k+1]
            let corner = |k: usize| slot_face[r[(k + 1) % 4].0 as usize];
            let (c01, c12, c23, c30) = (corner(0), corner(1), corner(2), corner(3));
            let first_pair_white = white[c01];
            let odd_over = d.visit_over(2 * c);
            let a_first = odd_over;
            let joined_first = d.rotation(c) > 0;
            CrossingData {
                white: if first_pair_white { [c01, c23] } else { [c12, c30] },
                eta: if first_pair_white == a_first { 1 } else { -1 },
                white_joined: first_pair_white == joined_first,
            }
        })
        .collect()
}

/// Reduced Goeritz matrix (first white face deleted) and the correction term, for the
/// faces of color `white_color`. The correction sums the incidence numbers of crossings
/// whose oriented smoothing keeps the two white corners apart.
pub fn goeritz_matrix(d: &Diagram, white_color: bool) -> (Vec<Vec<i64>>, i64) {
    let (fs, color) = checkerboard(d);
    let white: Vec<bool> = color.iter().map(|&c| c == white_color).collect();
    let ids: Vec<usize> = (0..fs.faces.len()).filter(|&f| white[f]).collect();
    let mut index = vec![usize::MAX; fs.faces.len()];
    for (k, &f) in ids.iter().enumerate() {
        index[f] = k;
    }
    let w = ids.len();
    let mut g = vec![vec![0i64; w]; w];
    let mut mu = 0i64;
    for cd in crossing_data(d, &fs.slot_face, &white) {
        let (a, b) = (index[cd.white[0]], index[cd.white[1]]);
        if a != b {
            g[a][b] += cd.eta;
            g[b][a] += cd.eta;
            g[a][a] -= cd.eta;
            g[b][b] -= cd.eta;
        }
        if !cd.white_joined {
            mu += cd.eta;
        }
    }
    let reduced = if w == 0 {
        vec![]
    } else {
        g[1..].iter().map(|row| row[1..].to_vec()).collect()
    };
    (reduced, mu)
}

/// Inertia `(positive, negative, zero)` and determinant of a symmetric integer matrix, by
/// symmetric elimination over the rationals.
pub fn inertia(m: &[Vec<i64>]) -> (usize, usize, usize, BigInt) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    let mut det = BigRational::one();
    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_sym(&mut a, i, k);
        } else if let Some((i, j)) = (k..n)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !a[i][j].is_zero())
        {
            // congruence by e_i -> e_i + e_j makes the diagonal entry 2 a_ij
            for t in 0..n {
                let v = a[j][t].clone();
                a[i][t] += v;
            }
            for t in 0..n {
                let v = a[t][j].clone();
                a[t][i] += v;
            }
            swap_sym(&mut a, i, k);
        } else {
            break;
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        det *= &p;
        let col: Vec<BigRational> = (0..n).map(|i| a[i][k].clone()).collect();
        for i in k + 1..n {
            if col[i].is_zero() {
                continue;
            }
            let f = &col[i] / &p;
            for j in k + 1..n {
                let v = &f * &col[j];
                a[i][j] -= v;
            }
        }
        for i in k + 1..n {
            a[i][k] = BigRational::zero();
            a[k][i] = BigRational::zero();
        }
        k += 1;
    }
    let zero = n - pos - neg;
    let det = if zero > 0 { BigInt::zero() } else { det.to_integer() };
    (pos, neg, zero, det)
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, k: usize) {
    if i == k {
        return;
    }
    a.swap(i, k);
    for row in a.iter_mut() {
        row.swap(i, k);
    }
}

/// Knot determinant and signature from the Goeritz form of the given color class:
/// `signature = sign(G) + correction`. Either color class gives the same values, and the
/// right-handed trefoil has signature `-2`.
pub fn goeritz_invariants(d: &Diagram, white_color: bool) -> (BigInt, i64) {
    if d.crossings() == 0 {
        return (BigInt::one(), 0);
    }
    let (g, mu) = goeritz_matrix(d, white_color);
    let (pos, neg, _, det) = inertia(&g);
    (det.abs(), pos as i64 - neg as i64 + mu)
}

pub fn determinant(d: &Diagram) -> BigInt {
    goeritz_invariants(d, false).0
}

pub fn signature(d: &Diagram) -> i64 {
    goeritz_invariants(d, false).1
}
