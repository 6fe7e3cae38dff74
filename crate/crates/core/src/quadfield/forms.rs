use std::fmt;

use num_integer::{Integer, Roots};
use serde::Serialize;

/// Binary quadratic form `a·x² + b·xy + c·y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BinaryForm {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl BinaryForm {
    pub fn new(a: i128, b: i128, c: i128) -> Self {
        BinaryForm { a, b, c }
    }

    /// Form `(a, b, (b² − D)/4a)`; `None` if c is not integral.
    pub fn from_ab(a: i128, b: i128, disc: i128) -> Option<Self> {
        let num = b * b - disc;
        if a == 0 || num % (4 * a) != 0 {
            return None;
        }
        Some(BinaryForm::new(a, b, num / (4 * a)))
    }

    pub fn disc(&self) -> i128 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// The principal form of discriminant `disc`.
    pub fn principal(disc: i128) -> Self {
        let b = disc.rem_euclid(2);
        BinaryForm::from_ab(1, b, disc).unwrap()
    }

    pub fn inverse(&self) -> Self {
        BinaryForm::new(self.a, -self.b, self.c)
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// `(a, b, c) ↦ (−a, b, −c)`: the twist by an element of negative norm.
    pub fn negated(&self) -> Self {
        BinaryForm::new(-self.a, self.b, -self.c)
    }

    /// Reduced in the sense of Gauss (definite case, a > 0).
    pub fn is_reduced_definite(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// Reduced indefinite form: `0 < b < √D` and `√D − b < 2|a| < √D + b`.
    pub fn is_reduced_indefinite(&self) -> bool {
        let s = self.disc().sqrt();
        let a2 = 2 * self.a.abs();
        self.b > 0 && self.b <= s && s < a2 + self.b && a2 - self.b <= s
    }

    /// Gauss reduction of a positive definite form.
    pub fn reduce_definite(&self) -> Self {
        debug_assert!(self.disc() < 0 && self.a > 0);
        let (mut a, mut b, mut c) = (self.a, self.b, self.c);
        loop {
            if b > a || b <= -a {
                // normalize b into (−a, a]
                let two_a = 2 * a;
                let r = (b + a - 1).div_euclid(two_a);
                let b2 = b - two_a * r;
                c = (b2 * b2 - (b * b - 4 * a * c)) / (4 * a);
                b = b2;
            }
            if a > c {
                (a, c) = (c, a);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            if b == -a {
                b = a;
            }
            return BinaryForm::new(a, b, c);
        }
    }

    /// One step of the indefinite reduction operator ρ.
    pub fn rho(&self) -> Self {
        let disc = self.disc();
        let s = disc.sqrt();
        let c = self.c;
        let m = 2 * c.abs();
        let r = if c.abs() > s {
            // −|c| < r ≤ |c|
            let mut r = (-self.b).rem_euclid(m);
            if r > c.abs() {
                r -= m;
            }
            r
        } else {
            // √D − 2|c| < r < √D
            s - (s + self.b).rem_euclid(m)
        };
        BinaryForm::from_ab(c, r, disc).expect("ρ preserves integrality")
    }

    /// Apply ρ until the form is reduced (indefinite case).
    pub fn reduce_indefinite(&self) -> Self {
        let mut f = *self;
        while !f.is_reduced_indefinite() {
            f = f.rho();
        }
        f
    }

    /// The ρ-cycle of a reduced indefinite form.
    pub fn cycle(&self) -> Vec<Self> {
        debug_assert!(self.is_reduced_indefinite());
        let mut out = vec![*self];
        let mut f = self.rho();
        while f != *self {
            out.push(f);
            f = f.rho();
        }
        out
    }

    /// Gaussian composition (Shanks' arrangement of Dirichlet's method).
    /// The result is not reduced.
    pub fn compose(&self, other: &Self) -> Self {
        let disc = self.disc();
        debug_assert_eq!(disc, other.disc());
        let (f1, f2) = if self.a.abs() > other.a.abs() {
            (other, self)
        } else {
            (self, other)
        };
        let (a1, b1) = (f1.a, f1.b);
        let (a2, b2, c2) = (f2.a, f2.b, f2.c);
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (y1, d) = if a2 % a1 == 0 {
            (0, a1.abs())
        } else {
            let e = a2.extended_gcd(&a1);
            (e.x, e.gcd)
        };
        let (x2, y2, d1) = if s % d == 0 {
            (0, -1, d)
        } else {
            let e = s.extended_gcd(&d);
            (e.x, -e.y, e.gcd)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1.abs());
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        BinaryForm::from_ab(a3, b3, disc).expect("composition yields an integral form")
    }
}

/// Primitive reduced forms of either sign of discriminant.
pub fn reduced_forms(disc: i128) -> Vec<BinaryForm> {
    if disc < 0 {
        reduced_definite_forms(disc)
    } else {
        reduced_indefinite_forms(disc)
    }
}

/// All primitive reduced positive definite forms of a negative discriminant.
pub fn reduced_definite_forms(disc: i128) -> Vec<BinaryForm> {
    assert!(disc < 0);
    let mut out = Vec::new();
    let amax = (-disc / 3).sqrt();
    for a in 1..=amax {
        for b in -a + 1..=a {
            if let Some(f) = BinaryForm::from_ab(a, b, disc) {
                if f.is_reduced_definite() && f.is_primitive() {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// All primitive reduced indefinite forms of a positive nonsquare discriminant.
pub fn reduced_indefinite_forms(disc: i128) -> Vec<BinaryForm> {
    assert!(disc > 0);
    let s = disc.sqrt();
    let mut out = Vec::new();
    for b in 1..=s {
        if (b - disc).rem_euclid(2) != 0 {
            continue;
        }
        for abs_a in 1..=(s + b) / 2 {
            for a in [abs_a, -abs_a] {
                if let Some(f) = BinaryForm::from_ab(a, b, disc) {
                    if f.is_reduced_indefinite() && f.is_primitive() {
                        out.push(f);
                    }
                }
            }
        }
    }
    out.sort();
    out
}
