//! Smith normal form over the integers and linear solving modulo a
//! composite, used to decide whether a cochain is a coboundary and to solve
//! the zesting obstruction equation.
//!
//! The systems here are small (at most a few hundred unknowns), so a dense
//! i128 implementation with pivot-size selection is plenty. All arithmetic is
//! checked; overflow aborts rather than corrupting a verdict.

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[a] += m * row[b]
    fn row_add(&mut self, a: usize, b: usize, m: i128) {
        for c in 0..self.cols {
            let v = self
                .at(a, c)
                .checked_add(m.checked_mul(self.at(b, c)).expect("snf overflow"))
                .expect("snf overflow");
            self.set(a, c, v);
        }
    }

    /// col[a] += m * col[b]
    fn col_add(&mut self, a: usize, b: usize, m: i128) {
        for r in 0..self.rows {
            let v = self
                .at(r, a)
                .checked_add(m.checked_mul(self.at(r, b)).expect("snf overflow"))
                .expect("snf overflow");
            self.set(r, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for c in 0..self.cols {
            let v = self.at(a, c);
            self.set(a, c, -v);
        }
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with each
/// diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let n = a.rows.min(a.cols);

    for k in 0..n {
        loop {
            // Pick the nonzero entry of smallest magnitude in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for r in k..d.rows {
                for c in k..d.cols {
                    let x = d.at(r, c).unsigned_abs();
                    if x != 0 && pivot.map_or(true, |(pr, pc)| x < d.at(pr, pc).unsigned_abs()) {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                return Smith { u, d, v };
            };
            d.swap_rows(k, pr);
            u.swap_rows(k, pr);
            d.swap_cols(k, pc);
            v.swap_cols(k, pc);

            let p = d.at(k, k);
            let mut clean = true;
            for r in k + 1..d.rows {
                let q = d.at(r, k).div_euclid(p);
                if q != 0 {
                    d.row_add(r, k, -q);
                    u.row_add(r, k, -q);
                }
                if d.at(r, k) != 0 {
                    clean = false;
                }
            }
            for c in k + 1..d.cols {
                let q = d.at(k, c).div_euclid(p);
                if q != 0 {
                    d.col_add(c, k, -q);
                    v.col_add(c, k, -q);
                }
                if d.at(k, c) != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let p = d.at(k, k);
            let mut fixed = true;
            'scan: for r in k + 1..d.rows {
                for c in k + 1..d.cols {
                    if d.at(r, c) % p != 0 {
                        d.row_add(k, r, 1);
                        u.row_add(k, r, 1);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d.at(k, k) < 0 {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    Smith { u, d, v }
}

/// Solves `a x = b (mod modulus)` componentwise for `x` over `Z/modulus`,
/// returning any solution reduced to `0..modulus`, or `None`.
///
/// Uses `u a v = d`: with `y = v^{-1} x`, the system is `d y = u b`, one
/// congruence per row, each solvable by gcd arithmetic.
pub fn solve_mod(a: &IntMatrix, b: &[i128], modulus: u64) -> Option<Vec<u64>> {
    assert_eq!(a.rows, b.len());
    let m = modulus as i128;
    assert!(m >= 1);
    if modulus == 1 {
        return Some(vec![0; a.cols]);
    }
    let s = smith_normal_form(a);
    // ub = u * b
    let ub: Vec<i128> = (0..a.rows)
        .map(|r| {
            (0..a.rows).fold(0i128, |acc, c| {
                acc.checked_add(s.u.at(r, c).checked_mul(b[c]).expect("snf overflow"))
                    .expect("snf overflow")
            })
        })
        .collect();
    let n = a.rows.min(a.cols);
    let mut y = vec![0i128; a.cols];
    for r in 0..a.rows {
        let rhs = ub[r].rem_euclid(m);
        let diag = if r < n { s.d.at(r, r) } else { 0 };
        if diag == 0 {
            if rhs != 0 {
                return None;
            }
            continue;
        }
        // Solve diag * y = rhs (mod m).
        let diag_m = diag.rem_euclid(m);
        if diag_m == 0 {
            if rhs != 0 {
                return None;
            }
            continue;
        }
        let g = gcd(diag_m, m);
        if rhs % g != 0 {
            return None;
        }
        let m_red = m / g;
        let diag_red = diag_m / g;
        let rhs_red = rhs / g;
        let inv = mod_inverse(diag_red.rem_euclid(m_red), m_red)?;
        y[r] = ((rhs_red % m_red) * inv).rem_euclid(m_red);
    }
    // x = v * y
    let x: Vec<u64> = (0..a.cols)
        .map(|r| {
            let val = (0..a.cols).fold(0i128, |acc, c| {
                acc.checked_add(s.v.at(r, c).checked_mul(y[c]).expect("snf overflow"))
                    .expect("snf overflow")
            });
            val.rem_euclid(m) as u64
        })
        .collect();
    Some(x)
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m, a.rem_euclid(m));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m))
}
