//! Double-double arithmetic for the few places where plain f64 rounding
//! would be amplified past a stated tolerance.
//!
//! A value is carried as an unevaluated sum hi + lo with |lo| at most half an
//! ulp of hi, built from the usual error-free transformations (two_sum, and
//! two_prod via FMA). Only the operations actually needed are provided.

/// Unevaluated sum hi + lo holding roughly twice f64 precision.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Exact sum: returns (s, e) with s = fl(a + b) and a + b = s + e exactly.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Fast path of `two_sum` valid when |a| >= |b|.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Exact product: returns (p, e) with p = fl(a * b) and a * b = p + e exactly.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Self { hi: s, lo: e }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        Dd::new(s, e + self.lo + other.lo)
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        Dd::new(p, e + self.hi * other.lo + self.lo * other.hi)
    }

    pub fn div_f64(self, b: f64) -> Dd {
        let q = self.hi / b;
        let r = f64::mul_add(-q, b, self.hi);
        Dd::new(q, (r + self.lo) / b)
    }

    pub fn sqrt(self) -> Dd {
        let s = self.hi.sqrt();
        let e = f64::mul_add(-s, s, self.hi);
        Dd::new(s, (e + self.lo) / (2.0 * s))
    }
}
