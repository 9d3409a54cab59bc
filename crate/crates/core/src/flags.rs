//! Flags of a cusp complex and the three involutions acting on them.
//!
//! A flag is a triangle with a chosen corner and a chosen side through that
//! corner. `σ0` moves the corner along the side, `σ1` swaps the side at the
//! corner, `σ2` crosses the side into the neighbouring triangle.

use crate::complex::CuspComplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSystem {
    pub sigma: [Vec<usize>; 3],
    pub triangle_count: usize,
}

/// Side index of the flag `(corner, b)`: `b = 0` is the side leaving the
/// corner counterclockwise, `b = 1` the side arriving at it.
fn side_of(corner: usize, b: usize) -> usize {
    if b == 0 {
        corner
    } else {
        (corner + 2) % 3
    }
}

fn flag(t: usize, corner: usize, side: usize) -> usize {
    let b = if side == corner { 0 } else { 1 };
    6 * t + 2 * corner + b
}

impl FlagSystem {
    pub fn new(cx: &CuspComplex) -> FlagSystem {
        let n = 6 * cx.triangles.len();
        let mut s0 = vec![0; n];
        let mut s1 = vec![0; n];
        let mut s2 = vec![0; n];
        for f in 0..n {
            let (t, a, b) = Self::decode(f);
            let s = side_of(a, b);
            let other = if a == s { (s + 1) % 3 } else { s };
            s0[f] = flag(t, other, s);
            s1[f] = 6 * t + 2 * a + (1 - b);
            let g = cx.gluings[t][s];
            let a2 = if a == s { (g.side + 1) % 3 } else { g.side };
            s2[f] = flag(g.triangle, a2, g.side);
        }
        FlagSystem { sigma: [s0, s1, s2], triangle_count: cx.triangles.len() }
    }

    pub fn len(&self) -> usize {
        6 * self.triangle_count
    }

    pub fn is_empty(&self) -> bool {
        self.triangle_count == 0
    }

    /// `(triangle, corner, b)`.
    pub fn decode(f: usize) -> (usize, usize, usize) {
        (f / 6, (f % 6) / 2, f % 2)
    }

    pub fn triangle(f: usize) -> usize {
        f / 6
    }

    pub fn corner(f: usize) -> usize {
        (f % 6) / 2
    }

    pub fn side(f: usize) -> usize {
        side_of((f % 6) / 2, f % 2)
    }

    /// Orbits of the subgroup generated by the listed involutions, each
    /// sorted, in order of their smallest flag.
    pub fn orbits(&self, generators: &[usize]) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let f = orbit[i];
                for &g in generators {
                    let h = self.sigma[g][f];
                    if !seen[h] {
                        seen[h] = true;
                        orbit.push(h);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        self.orbits(&[1, 2])
    }

    pub fn edge_orbits(&self) -> Vec<Vec<usize>> {
        self.orbits(&[0, 2])
    }

    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        self.orbits(&[0, 1])
    }

    /// Two-colouring of flags with adjacent flags in different classes, if the
    /// surface is orientable.
    pub fn orientation_classes(&self) -> Option<Vec<bool>> {
        let n = self.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                let cf = colour[f].unwrap();
                for s in &self.sigma {
                    let h = s[f];
                    match colour[h] {
                        None => {
                            colour[h] = Some(!cf);
                            stack.push(h);
                        }
                        Some(ch) if ch == cf => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }
}
