//! Upward-rounded magnitude bounds with an unbounded exponent, used for
//! ball radii and rounding-error accounting. The mantissa keeps a few
//! guard digits and every operation rounds up.

/// value = man * 2^exp with man in [1, 2) (or exactly 0).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mag {
    man: f64,
    exp: i64,
}

const SLACK: f64 = 1.0 + 1e-9;

impl Mag {
    pub fn zero() -> Self {
        Self { man: 0.0, exp: 0 }
    }

    pub fn pow2(exp: i64) -> Self {
        Self { man: 1.0, exp }
    }

    pub fn from_f64(v: f64) -> Self {
        assert!(v >= 0.0 && v.is_finite());
        if v == 0.0 {
            return Self::zero();
        }
        let exp = v.log2().floor() as i64;
        let mut m = Self { man: v / 2f64.powi(exp as i32) * SLACK, exp };
        m.normalize();
        m
    }

    pub fn is_zero(&self) -> bool {
        self.man == 0.0
    }

    fn normalize(&mut self) {
        if self.man == 0.0 {
            self.exp = 0;
            return;
        }
        while self.man >= 2.0 {
            self.man /= 2.0;
            self.exp += 1;
        }
        while self.man < 1.0 {
            self.man *= 2.0;
            self.exp -= 1;
        }
    }

    /// Smallest k with value <= 2^k.
    pub fn exp_upper(&self) -> i64 {
        if self.is_zero() {
            i64::MIN / 2
        } else if self.man == 1.0 {
            self.exp
        } else {
            self.exp + 1
        }
    }

    pub fn add(&self, rhs: &Mag) -> Mag {
        if self.is_zero() {
            return *rhs;
        }
        if rhs.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.exp >= rhs.exp { (self, rhs) } else { (rhs, self) };
        let shift = hi.exp - lo.exp;
        let add = if shift > 128 { 0.0 } else { lo.man / 2f64.powi(shift as i32) };
        let mut out = Mag { man: (hi.man + add) * SLACK, exp: hi.exp };
        out.normalize();
        out
    }

    pub fn mul(&self, rhs: &Mag) -> Mag {
        if self.is_zero() || rhs.is_zero() {
            return Mag::zero();
        }
        let mut out = Mag { man: self.man * rhs.man * SLACK, exp: self.exp + rhs.exp };
        out.normalize();
        out
    }

    pub fn scale_pow2(&self, k: i64) -> Mag {
        if self.is_zero() {
            return *self;
        }
        Mag { man: self.man, exp: self.exp + k }
    }

    pub fn max(&self, rhs: &Mag) -> Mag {
        if self.ge(rhs) { *self } else { *rhs }
    }

    pub fn ge(&self, rhs: &Mag) -> bool {
        if rhs.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        (self.exp, self.man) >= (rhs.exp, rhs.man)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else if self.exp > 1000 {
            f64::INFINITY
        } else if self.exp < -1000 {
            0.0
        } else {
            self.man * 2f64.powi(self.exp as i32)
        }
    }

    /// Exact dyadic upper bound: (m, e) with self <= m * 2^e and m an
    /// integer mantissa.
    pub fn to_dyadic_upper(&self) -> (u64, i64) {
        if self.is_zero() {
            return (0, 0);
        }
        // man in [1, 2): scale to 53 bits and round up
        let scaled = (self.man * 2f64.powi(52)).ceil() as u64 + 1;
        (scaled, self.exp - 52)
    }

    /// Decimal-ish display for reports: "man e exp2".
    pub fn describe(&self) -> String {
        if self.is_zero() {
            "0".to_string()
        } else {
            format!("{:.3}*2^{}", self.man, self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_upper() {
        let a = Mag::from_f64(3.0);
        let b = Mag::from_f64(5.0);
        assert!(a.add(&b).to_f64() >= 8.0);
        assert!(a.mul(&b).to_f64() >= 15.0);
        assert!(Mag::pow2(-100).add(&Mag::pow2(-400)).to_f64() >= 2f64.powi(-100));
    }

    #[test]
    fn huge_exponents_survive() {
        let tiny = Mag::pow2(-100_000);
        assert!(!tiny.is_zero());
        // upward slack may cost one exponent step
        let e = tiny.mul(&Mag::pow2(50)).exp_upper();
        assert!((-99_950..=-99_949).contains(&e));
    }
}
