//! Evaluatable one-parameter families (t, x) ↦ f_t(x) with their
//! x-derivatives: two built-in quadratic families and user-defined
//! expression families from a key-value registry file.

mod config;
mod expr;

pub use config::{parse_registry, ConfigError, FamilyRegistry};
pub use expr::{Expr, ExprError};

/// Whether the x-derivative is analytic or falls back to central finite
/// differences (flagged in reports).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeKind {
    Analytic,
    FiniteDifference,
}

#[derive(Debug, Clone)]
enum FamilyKind {
    /// f_t(x) = (7/2)t - 1 - x², a continuous full family on t ∈ [0,1].
    ReparamQuadratic,
    /// f_t(x) = s(t) - x² with s affine from [0,1] onto a user range.
    RawQuadratic,
    Expression { f: Expr, df: Option<Expr> },
}

/// A one-parameter family of unimodal maps on t ∈ [0,1], with the bound M
/// such that all fixed points (and hence all periodic points of interest)
/// of every f_t lie in [-M, M].
#[derive(Debug, Clone)]
pub struct Family {
    name: String,
    kind: FamilyKind,
    bound_m: f64,
    s_range: (f64, f64),
}

impl Family {
    /// The built-in continuous full family f_t(x) = (7/2)t - 1 - x²:
    /// f_0 has no fixed point and f_1 = 2.5 - x² is a horseshoe.
    pub fn reparam_quadratic() -> Family {
        Family {
            name: "quad".to_string(),
            kind: FamilyKind::ReparamQuadratic,
            bound_m: 2.5,
            s_range: (-1.0, 2.5),
        }
    }

    /// The raw quadratic q_s(x) = s - x² traversed over a user range of s.
    pub fn raw_quadratic(s_lo: f64, s_hi: f64) -> Family {
        // periodic orbits of q_s stay inside [-b_s, b_s] where b_s is the
        // escape radius (1 + sqrt(1+4s))/2, increasing in s
        let s_top = s_hi.max(s_lo).max(0.0);
        let b = 0.5 * (1.0 + (1.0 + 4.0 * s_top).sqrt());
        Family {
            name: "qt".to_string(),
            kind: FamilyKind::RawQuadratic,
            bound_m: 1.02 * b + 0.01,
            s_range: (s_lo, s_hi),
        }
    }

    /// A family from expression text, e.g. `f = 3.5*t - 1 - x^2`. Without a
    /// derivative expression, central finite differences are used.
    pub fn from_expressions(
        name: &str,
        f_src: &str,
        df_src: Option<&str>,
        bound_m: f64,
    ) -> Result<Family, ExprError> {
        let f = Expr::parse(f_src)?;
        let df = df_src.map(Expr::parse).transpose()?;
        Ok(Family {
            name: name.to_string(),
            kind: FamilyKind::Expression { f, df },
            bound_m,
            s_range: (0.0, 1.0),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn bound_m(&self) -> f64 {
        self.bound_m
    }

    /// The user-facing parameter for internal t ∈ [0,1] (identity unless the
    /// family was built over an explicit parameter range).
    pub fn param(&self, t: f64) -> f64 {
        let (lo, hi) = self.s_range;
        lo + (hi - lo) * t
    }

    pub fn param_range(&self) -> (f64, f64) {
        self.s_range
    }

    pub fn eval(&self, t: f64, x: f64) -> f64 {
        match &self.kind {
            FamilyKind::ReparamQuadratic => 3.5 * t - 1.0 - x * x,
            FamilyKind::RawQuadratic => self.param(t) - x * x,
            FamilyKind::Expression { f, .. } => f.eval(t, x),
        }
    }

    pub fn deriv(&self, t: f64, x: f64) -> f64 {
        match &self.kind {
            FamilyKind::ReparamQuadratic | FamilyKind::RawQuadratic => -2.0 * x,
            FamilyKind::Expression { df: Some(df), .. } => df.eval(t, x),
            FamilyKind::Expression { f, df: None } => {
                let h = 6.0e-6 * (1.0 + x.abs());
                (f.eval(t, x + h) - f.eval(t, x - h)) / (2.0 * h)
            }
        }
    }

    pub fn derivative_kind(&self) -> DerivativeKind {
        match &self.kind {
            FamilyKind::Expression { df: None, .. } => DerivativeKind::FiniteDifference,
            _ => DerivativeKind::Analytic,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reparam_quadratic_endpoints() {
        let f = Family::reparam_quadratic();
        assert_eq!(f.eval(1.0, 0.0), 2.5);
        assert_eq!(f.eval(0.0, 0.0), -1.0);
        assert_eq!(f.deriv(0.3, 2.0), -4.0);
        assert_eq!(f.param(1.0), 2.5);
    }

    #[test]
    fn raw_quadratic_maps_parameter_range() {
        let f = Family::raw_quadratic(1.4, 2.1);
        assert!((f.eval(0.0, 1.0) - 0.4).abs() < 1e-15);
        assert!((f.eval(1.0, 1.0) - 1.1).abs() < 1e-15);
        assert!((f.param(0.5) - 1.75).abs() < 1e-15);
        // bound covers the escape radius at s = 2.1
        assert!(f.bound_m() > 2.03);
    }

    #[test]
    fn expression_family_with_finite_difference_derivative() {
        let f = Family::from_expressions("e", "t - x^2", None, 2.0).unwrap();
        assert_eq!(f.derivative_kind(), DerivativeKind::FiniteDifference);
        assert!((f.deriv(0.5, 1.25) - (-2.5)).abs() < 1e-8);
        let g = Family::from_expressions("g", "t - x^2", Some("-2*x"), 2.0).unwrap();
        assert_eq!(g.derivative_kind(), DerivativeKind::Analytic);
        assert_eq!(g.deriv(0.5, 1.25), -2.5);
    }
}
