use crate::Complex;

/// Kahan-compensated accumulator for complex sums.
///
/// Every reduction in this crate runs in a fixed order through one of
/// these, so repeated runs (and runs under different thread counts) are
/// bit-identical.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum_re: f64,
    sum_im: f64,
    comp_re: f64,
    comp_im: f64,
}

impl KahanSum {
    pub fn add(&mut self, z: Complex) {
        let y = z.re - self.comp_re;
        let t = self.sum_re + y;
        self.comp_re = (t - self.sum_re) - y;
        self.sum_re = t;

        let y = z.im - self.comp_im;
        let t = self.sum_im + y;
        self.comp_im = (t - self.sum_im) - y;
        self.sum_im = t;
    }

    pub fn value(&self) -> Complex {
        Complex::new(self.sum_re, self.sum_im)
    }
}
