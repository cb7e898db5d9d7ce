//! The fixed angles of the I7 problem, evaluated from elementary functions
//! at the context's working precision.

use rug::Float;

use crate::precision::PrecisionContext;

#[derive(Debug, Clone)]
pub struct PaperConstants {
    pub pi: Float,
    pub sqrt7: Float,
    /// `arctan(sqrt 7)`, the singular point of the I7 integrand in `(pi/3, pi/2)`.
    pub phi7: Float,
    /// `arctan(sqrt(7) / 3)`.
    pub theta_plus: Float,
    /// `arctan(sqrt 7) - 2 pi / 3`.
    pub omega_plus: Float,
}

impl PaperConstants {
    pub fn new(ctx: &PrecisionContext) -> Self {
        let prec = ctx.prec();
        let pi = ctx.pi();
        let sqrt7 = Float::with_val(prec, 7).sqrt();
        let phi7 = Float::with_val(prec, sqrt7.atan_ref());
        let theta_plus = Float::with_val(prec, &sqrt7 / 3u32).atan();
        let omega_plus = Float::with_val(prec, &phi7 - Float::with_val(prec, &pi * 2u32) / 3u32);
        Self {
            pi,
            sqrt7,
            phi7,
            theta_plus,
            omega_plus,
        }
    }

    /// The other expression for `omega_plus`: `-arctan((2 sqrt 3 + sqrt 7) / 5)`.
    pub fn omega_plus_arctan_form(&self) -> Float {
        let prec = self.pi.prec();
        let sqrt3 = Float::with_val(prec, 3).sqrt();
        let num = Float::with_val(prec, sqrt3 * 2u32) + &self.sqrt7;
        -(num / 5u32).atan()
    }
}

/// `constants(ctx)`.
pub fn constants(ctx: &PrecisionContext) -> PaperConstants {
    PaperConstants::new(ctx)
}
