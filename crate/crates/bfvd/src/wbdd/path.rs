//! Weighted degree-two paths: deletion optimum and characteristic matrix.
//!
//! A path is classified by a 3x3 matrix whose `(x, y)` entry is the extra
//! deletion cost (over the unconstrained optimum) of a solution whose
//! intersection pattern with the two outermost vertices on each end is
//! fixed: 1 = endpoint deleted, 2 = endpoint kept but its inner neighbor
//! deleted, 3 = both kept.

use crate::error::{Error, Result};

/// Matrix entry: finite offset or infeasible.
pub type Entry = Option<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharMatrix(pub [[Entry; 3]; 3]);

impl CharMatrix {
    pub fn render(&self) -> String {
        let cells: Vec<String> = self
            .0
            .iter()
            .flatten()
            .map(|e| match e {
                Some(v) => v.to_string(),
                None => "inf".into(),
            })
            .collect();
        cells.join(",")
    }
}

/// Inner weights of path-family members are stored as offsets from `r`,
/// one of `-2`, `-1`, `0`; endpoints sit at `-1`. One table therefore
/// serves every `r >= 2`.
pub const INNER_OFFSETS: [i8; 3] = [-2, -1, 0];
pub const ENDPOINT_OFFSET: i8 = -1;

/// Absolute weights of a path-family member for a concrete `r >= 2`.
pub fn weights_from_offsets(inner: &[i8], r: u32) -> Vec<u32> {
    assert!(r >= 2, "offset -2 needs r >= 2");
    let abs = |off: i8| (i64::from(r) + i64::from(off)) as u32;
    let mut w = Vec::with_capacity(inner.len() + 2);
    w.push(abs(ENDPOINT_OFFSET));
    w.extend(inner.iter().map(|&o| abs(o)));
    w.push(abs(ENDPOINT_OFFSET));
    w
}

/// Membership constraint for one vertex position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Force {
    In,
    Out,
    Free,
}

/// Minimum deletions on a weighted path so every kept vertex `v` ends with
/// degree at most `r - w_v`, with optional forced in/out positions.
/// Left-to-right DP over (previous kept, current kept); a vertex's
/// constraint is settled once its right neighbor is decided. `None` means
/// no assignment satisfies the constraints.
fn path_opt_constrained(weights: &[u32], r: u32, force: &[Force]) -> Option<usize> {
    let len = weights.len();
    debug_assert_eq!(force.len(), len);
    let caps: Vec<i64> = weights
        .iter()
        .map(|&w| i64::from(r) - i64::from(w))
        .collect();
    let allowed = |p: usize, kept: bool| match force[p] {
        Force::In => !kept,
        Force::Out => kept,
        Force::Free => true,
    };
    let cost = |kept: bool| usize::from(!kept);

    if len == 0 {
        return Some(0);
    }
    if len == 1 {
        let mut best = None;
        for kept in [true, false] {
            if !allowed(0, kept) {
                continue;
            }
            if kept && caps[0] < 0 {
                continue;
            }
            best = min_opt(best, Some(cost(kept)));
        }
        return best;
    }

    // dp[prev as usize][cur as usize] = best cost so far
    let mut dp = [[None; 2], [None; 2]];
    for prev in [false, true] {
        if !allowed(0, prev) {
            continue;
        }
        for cur in [false, true] {
            if !allowed(1, cur) {
                continue;
            }
            // vertex 0 has only vertex 1 as neighbor
            if prev && i64::from(cur) > caps[0] {
                continue;
            }
            let c = cost(prev) + cost(cur);
            dp[prev as usize][cur as usize] = min_opt(dp[prev as usize][cur as usize], Some(c));
        }
    }
    for p in 2..len {
        let mut next = [[None; 2], [None; 2]];
        for prev in [false, true] {
            for cur in [false, true] {
                let Some(base) = dp[prev as usize][cur as usize] else {
                    continue;
                };
                for nxt in [false, true] {
                    if !allowed(p, nxt) {
                        continue;
                    }
                    // vertex p-1 is now fully surrounded
                    if cur && i64::from(prev) + i64::from(nxt) > caps[p - 1] {
                        continue;
                    }
                    let c = base + cost(nxt);
                    next[cur as usize][nxt as usize] =
                        min_opt(next[cur as usize][nxt as usize], Some(c));
                }
            }
        }
        dp = next;
    }
    let mut best = None;
    for prev in [false, true] {
        for cur in [false, true] {
            let Some(base) = dp[prev as usize][cur as usize] else {
                continue;
            };
            if cur && i64::from(prev) > caps[len - 1] {
                continue;
            }
            best = min_opt(best, Some(base));
        }
    }
    best
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Unconstrained optimum. Deleting everything is always feasible, so this
/// cannot fail; weights above `r` are a caller error (the high-weight
/// rule must run first).
pub fn opt_path(weights: &[u32], r: u32) -> Result<usize> {
    if let Some(&w) = weights.iter().find(|&&w| w > r) {
        return Err(Error::Precondition(format!(
            "opt_path saw weight {w} > r = {r}; apply the high-weight rule first"
        )));
    }
    let force = vec![Force::Free; weights.len()];
    Ok(path_opt_constrained(weights, r, &force).expect("all-deleted is feasible"))
}

fn is_family_member(weights: &[u32], r: u32) -> bool {
    let len = weights.len();
    len >= 5
        && weights[0] + 1 == r
        && weights[len - 1] + 1 == r
        && weights[1..len - 1]
            .iter()
            .all(|&w| w + 2 >= r && w <= r)
}

/// The sound replacement interface: per side, the three ambient contexts
/// are *endpoint deleted*, *endpoint kept and its inner neighbor deleted*
/// (the path donates one deletion to the endpoint's degree constraint),
/// and *endpoint kept with no demand*. Contexts are closed under the
/// domination order deleted ⪯ kept-with-help ⪯ kept: deleting an endpoint
/// never hurts the rest of the graph, and donated help never hurts the
/// path side, so a dominated context can always be served by a dominating
/// one. Two paths with equal profiles (entries relative to the optimum)
/// are exchangeable inside any host graph.
///
/// This is deliberately finer than [`characteristic_matrix`]: matching on
/// the printed matrix alone does not preserve answers (see the table
/// module's tests).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryProfile(pub [[i64; 3]; 3]);

/// Works for any weighted path on at least four vertices with all weights
/// at most `r`.
pub fn boundary_profile(weights: &[u32], r: u32) -> Result<BoundaryProfile> {
    if weights.len() < 4 {
        return Err(Error::Precondition(
            "boundary profiles need at least four vertices".into(),
        ));
    }
    if let Some(&w) = weights.iter().find(|&&w| w > r) {
        return Err(Error::Precondition(format!(
            "boundary_profile saw weight {w} > r = {r}"
        )));
    }
    let len = weights.len();
    let opt = opt_path(weights, r)? as i64;
    // raw[cx][cy]: constrained minima; 0 = endpoint in S, 1 = endpoint
    // kept + inner neighbor in S, 2 = endpoint kept
    let mut raw = [[0i64; 3]; 3];
    for cx in 0..3 {
        for cy in 0..3 {
            let mut force = vec![Force::Free; len];
            match cx {
                0 => force[0] = Force::In,
                1 => {
                    force[0] = Force::Out;
                    force[1] = Force::In;
                }
                _ => force[0] = Force::Out,
            }
            match cy {
                0 => force[len - 1] = Force::In,
                1 => {
                    force[len - 1] = Force::Out;
                    force[len - 2] = Force::In;
                }
                _ => force[len - 1] = Force::Out,
            }
            raw[cx][cy] = path_opt_constrained(weights, r, &force)
                .expect("every boundary context admits a deletion set")
                as i64;
        }
    }
    let mut env = [[0i64; 3]; 3];
    for cx in 0..3 {
        for cy in 0..3 {
            let mut best = i64::MAX;
            for dx in 0..=cx {
                for dy in 0..=cy {
                    best = best.min(raw[dx][dy]);
                }
            }
            env[cx][cy] = best - opt;
        }
    }
    Ok(BoundaryProfile(env))
}

/// The nine constrained optima, relative to the unconstrained one.
/// Requires a family member (`w_1 = w_l = r - 1`, inner weights within two
/// of `r`) on at least five vertices and `r >= 2`.
pub fn characteristic_matrix(weights: &[u32], r: u32) -> Result<CharMatrix> {
    if r < 2 {
        return Err(Error::UnsupportedParameter(
            "characteristic matrices need r >= 2 (weight r - 2 is undefined below)".into(),
        ));
    }
    if !is_family_member(weights, r) {
        return Err(Error::Precondition(format!(
            "not a path-family member at r = {r}: {weights:?}"
        )));
    }
    let len = weights.len();
    let opt = opt_path(weights, r)? as i64;
    let mut m = [[None; 3]; 3];
    for (xi, x) in [1, 2, 3].into_iter().enumerate() {
        for (yi, y) in [1, 2, 3].into_iter().enumerate() {
            let mut force = vec![Force::Free; len];
            match x {
                1 => force[0] = Force::In,
                2 => {
                    force[0] = Force::Out;
                    force[1] = Force::In;
                }
                _ => {
                    force[0] = Force::Out;
                    force[1] = Force::Out;
                }
            }
            match y {
                1 => force[len - 1] = Force::In,
                2 => {
                    force[len - 1] = Force::Out;
                    force[len - 2] = Force::In;
                }
                _ => {
                    force[len - 1] = Force::Out;
                    force[len - 2] = Force::Out;
                }
            }
            m[xi][yi] = path_opt_constrained(weights, r, &force).map(|s| s as i64 - opt);
        }
    }
    Ok(CharMatrix(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive check over all 2^len deletion sets.
    fn brute_opt(weights: &[u32], r: u32, force: &[Force]) -> Option<usize> {
        let len = weights.len();
        let mut best = None;
        'outer: for mask in 0u32..1 << len {
            let deleted = |p: usize| mask >> p & 1 == 1;
            for p in 0..len {
                match force[p] {
                    Force::In if !deleted(p) => continue 'outer,
                    Force::Out if deleted(p) => continue 'outer,
                    _ => {}
                }
            }
            for p in 0..len {
                if deleted(p) {
                    continue;
                }
                let mut deg = 0;
                if p > 0 && !deleted(p - 1) {
                    deg += 1;
                }
                if p + 1 < len && !deleted(p + 1) {
                    deg += 1;
                }
                if deg + weights[p] as i64 > r as i64 {
                    continue 'outer;
                }
            }
            let size = mask.count_ones() as usize;
            best = min_opt(best, Some(size));
        }
        best
    }

    #[test]
    fn opt_examples() {
        assert_eq!(opt_path(&[0, 0, 0], 2).unwrap(), 0);
        // all saturated: delete the middle, endpoints become isolated
        assert_eq!(opt_path(&[2, 2, 2], 2).unwrap(), 1);
        // family member (r-1, r, r, r, r-1) at r=2
        assert_eq!(opt_path(&[1, 2, 2, 2, 1], 2).unwrap(), 2);
    }

    #[test]
    fn opt_rejects_overweight() {
        assert!(matches!(
            opt_path(&[0, 3, 0], 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dp_matches_brute_force_on_all_family_members() {
        for r in [2u32, 3, 4] {
            for len in [5usize, 6, 7] {
                let inner = len - 2;
                let mut digits = vec![0usize; inner];
                loop {
                    let offsets: Vec<i8> = digits.iter().map(|&d| INNER_OFFSETS[d]).collect();
                    let weights = weights_from_offsets(&offsets, r);
                    let force = vec![Force::Free; len];
                    assert_eq!(
                        path_opt_constrained(&weights, r, &force),
                        brute_opt(&weights, r, &force)
                    );
                    // step the odometer
                    let mut pos = 0;
                    loop {
                        if pos == inner {
                            break;
                        }
                        digits[pos] += 1;
                        if digits[pos] < 3 {
                            break;
                        }
                        digits[pos] = 0;
                        pos += 1;
                    }
                    if pos == inner {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_entries_on_saturated_p5() {
        // weights (r-1, r, r, r, r-1) at r = 2
        let m = characteristic_matrix(&[1, 2, 2, 2, 1], 2).unwrap();
        // deleting v2 and v4 attains the optimum with both endpoints kept
        assert_eq!(m.0[1][1], Some(0));
        // keeping v1 next to kept v2 violates cap 0: infeasible
        assert_eq!(m.0[2][2], None);
        // endpoints deleted: best is {v1, v3, v5}, one above optimum
        assert_eq!(m.0[0][0], Some(1));
    }

    #[test]
    fn matrix_matches_brute_force_everywhere() {
        for r in [2u32, 3, 4] {
            for len in [5usize, 6, 7] {
                let inner = len - 2;
                for code in 0..3usize.pow(inner as u32) {
                    let mut c = code;
                    let offsets: Vec<i8> = (0..inner)
                        .map(|_| {
                            let d = INNER_OFFSETS[c % 3];
                            c /= 3;
                            d
                        })
                        .collect();
                    let weights = weights_from_offsets(&offsets, r);
                    let m = characteristic_matrix(&weights, r).unwrap();
                    let opt = brute_opt(&weights, r, &vec![Force::Free; len]).unwrap() as i64;
                    for (xi, x) in [1, 2, 3].into_iter().enumerate() {
                        for (yi, y) in [1, 2, 3].into_iter().enumerate() {
                            let mut force = vec![Force::Free; len];
                            match x {
                                1 => force[0] = Force::In,
                                2 => {
                                    force[0] = Force::Out;
                                    force[1] = Force::In;
                                }
                                _ => {
                                    force[0] = Force::Out;
                                    force[1] = Force::Out;
                                }
                            }
                            match y {
                                1 => force[len - 1] = Force::In,
                                2 => {
                                    force[len - 1] = Force::Out;
                                    force[len - 2] = Force::In;
                                }
                                _ => {
                                    force[len - 1] = Force::Out;
                                    force[len - 2] = Force::Out;
                                }
                            }
                            let brute =
                                brute_opt(&weights, r, &force).map(|s| s as i64 - opt);
                            assert_eq!(m.0[xi][yi], brute, "r={r} w={weights:?} x={x} y={y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_r_below_two() {
        assert!(matches!(
            characteristic_matrix(&[0, 1, 1, 1, 0], 1),
            Err(Error::UnsupportedParameter(_))
        ));
    }
}
