use crate::error::{Error, Result};
use crate::reduction::EvalReal;

use super::GeneralSolution;

/// Where the values of an orbit came from.
#[derive(Clone, Debug, PartialEq)]
pub enum OrbitOrigin {
    LinearMap {
        slope: f64,
        x0: f64,
    },
    Solution,
    /// Built from other orbits (differences, reversal).
    Derived(String),
}

/// Finite window `x_{j_min}, ..., x_{j_max}` of a bi-infinite sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Orbit {
    j_min: i64,
    values: Vec<f64>,
    pub origin: OrbitOrigin,
}

impl Orbit {
    /// Wraps values starting at index `j_min`. The window must contain 0.
    pub fn new(j_min: i64, values: Vec<f64>, origin: OrbitOrigin) -> Result<Self> {
        let j_max = j_min + values.len() as i64 - 1;
        if values.is_empty() || j_min > 0 || j_max < 0 {
            return Err(Error::domain(format!(
                "orbit window [{j_min}, {j_max}] must contain index 0"
            )));
        }
        Ok(Orbit { j_min, values, origin })
    }

    /// Samples a closed-form solution over `[j_min, j_max]`.
    pub fn from_solution(gs: &GeneralSolution, j_min: i64, j_max: i64) -> Result<Self> {
        check_window(j_min, j_max)?;
        let values = (j_min..=j_max).map(|j| gs.eval(j)).collect::<Result<Vec<_>>>()?;
        Orbit::new(j_min, values, OrbitOrigin::Solution)
    }

    pub fn j_min(&self) -> i64 {
        self.j_min
    }

    pub fn j_max(&self) -> i64 {
        self.j_min + self.values.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, j: i64) -> Option<f64> {
        let k = usize::try_from(j - self.j_min).ok()?;
        self.values.get(k).copied()
    }

    /// `(j, x_j)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &x)| (self.j_min + k as i64, x))
    }

    /// `x_j - y_j` over the common window.
    pub fn difference(&self, other: &Orbit) -> Result<Orbit> {
        self.combine(other, 0, "difference")
    }

    /// `x_{j+1} - y_j` wherever both terms are available.
    pub fn shifted_difference(&self, other: &Orbit) -> Result<Orbit> {
        self.combine(other, 1, "shifted difference")
    }

    fn combine(&self, other: &Orbit, shift: i64, what: &str) -> Result<Orbit> {
        let lo = (self.j_min - shift).max(other.j_min);
        let hi = (self.j_max() - shift).min(other.j_max());
        check_window(lo, hi)?;
        let values = (lo..=hi)
            .map(|j| self.get(j + shift).expect("in window") - other.get(j).expect("in window"))
            .collect();
        Orbit::new(lo, values, OrbitOrigin::Derived(what.to_string()))
    }

    /// The index-reversed sequence `j -> x_{-j}`.
    pub fn reversed(&self) -> Orbit {
        let mut values = self.values.clone();
        values.reverse();
        Orbit {
            j_min: -self.j_max(),
            values,
            origin: OrbitOrigin::Derived("reversed".to_string()),
        }
    }

    /// Largest absolute value in the window.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

fn check_window(j_min: i64, j_max: i64) -> Result<()> {
    if j_min > 0 || j_max < 0 {
        Err(Error::domain(format!("window [{j_min}, {j_max}] must contain index 0")))
    } else {
        Ok(())
    }
}

/// Orbit `x_j = f^j(x0)` of the linear map `f(x) = slope * x`, extended to
/// negative `j` through the inverse map.
pub fn orbit_from_linear_map(slope: f64, x0: f64, j_min: i64, j_max: i64) -> Result<Orbit> {
    if slope == 0.0 || !slope.is_finite() {
        return Err(Error::domain("slope must be finite and nonzero for f to be invertible"));
    }
    check_window(j_min, j_max)?;
    let values: Vec<f64> = (j_min..=j_max)
        .map(|j| {
            let e = j.unsigned_abs() as i32;
            if j >= 0 {
                x0 * slope.powi(e)
            } else {
                x0 / slope.powi(e)
            }
        })
        .collect();
    if let Some(k) = values.iter().position(|x| !x.is_finite()) {
        return Err(Error::numeric(format!("orbit overflows at j = {}", j_min + k as i64)));
    }
    Orbit::new(j_min, values, OrbitOrigin::LinearMap { slope, x0 })
}

/// Residual of the recurrence `sum_k a_k x_{j+k} = 0` along an orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceResidual {
    pub max_abs: f64,
    /// `max_abs / (max|a_k| * max|x_j|)`.
    pub relative: f64,
}

pub fn recurrence_residual<P: EvalReal + ?Sized>(coeffs: &P, orbit: &Orbit) -> Result<RecurrenceResidual> {
    let a = coeffs.coeffs_f64();
    let n = a.len().saturating_sub(1);
    if orbit.len() <= n {
        return Err(Error::domain(format!(
            "window of length {} is too short for a recurrence of order {n}",
            orbit.len()
        )));
    }
    let x = orbit.values();
    let max_abs = (0..x.len() - n)
        .map(|s| a.iter().zip(&x[s..=s + n]).map(|(a, x)| a * x).sum::<f64>().abs())
        .fold(0.0, f64::max);
    let scale = a.iter().fold(0.0f64, |m, c| m.max(c.abs())) * orbit.max_abs();
    Ok(RecurrenceResidual {
        max_abs,
        relative: if scale > 0.0 { max_abs / scale } else { max_abs },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::Polynomial;

    #[test]
    fn powers_of_minus_two() {
        let o = orbit_from_linear_map(-2.0, 1.0, -2, 3).unwrap();
        assert_eq!(o.values(), &[0.25, -0.5, 1.0, -2.0, 4.0, -8.0]);
        assert_eq!(o.get(-2), Some(0.25));
        assert_eq!(o.get(4), None);
    }

    #[test]
    fn unit_slope_and_half_slope() {
        let o = orbit_from_linear_map(1.0, 3.0, -4, 4).unwrap();
        assert!(o.values().iter().all(|&x| x == 3.0));
        let o = orbit_from_linear_map(-0.5, 4.0, 0, 2).unwrap();
        assert_eq!(o.get(2), Some(1.0));
    }

    #[test]
    fn zero_slope_rejected() {
        assert!(matches!(orbit_from_linear_map(0.0, 1.0, -1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn residual_examples() {
        let p = Polynomial::from_i64_descending(&[2, 5, 2]);
        let r = recurrence_residual(&p, &orbit_from_linear_map(-2.0, 1.0, -5, 5).unwrap()).unwrap();
        assert_eq!(r.max_abs, 0.0);
        let r = recurrence_residual(
            &Polynomial::from_i64_descending(&[1, -1]),
            &orbit_from_linear_map(1.0, 7.0, -3, 3).unwrap(),
        )
        .unwrap();
        assert_eq!(r.max_abs, 0.0);
        let r = recurrence_residual(&p, &orbit_from_linear_map(1.0, 1.0, 0, 4).unwrap()).unwrap();
        assert_eq!(r.max_abs, 9.0);
        assert!(recurrence_residual(&p, &orbit_from_linear_map(1.0, 1.0, 0, 1).unwrap()).is_err());
    }

    #[test]
    fn reversal_and_differences() {
        let x = orbit_from_linear_map(-2.0, 1.0, -2, 3).unwrap();
        let r = x.reversed();
        assert_eq!(r.j_min(), -3);
        assert_eq!(r.get(2), Some(0.25));
        assert_eq!(r.get(-3), Some(-8.0));
        let y = orbit_from_linear_map(-2.0, 3.0, -2, 3).unwrap();
        let d = x.difference(&y).unwrap();
        assert_eq!(d.get(1), Some(4.0));
        let s = x.shifted_difference(&y).unwrap();
        assert_eq!((s.j_min(), s.j_max()), (-2, 2));
        assert_eq!(s.get(0), Some(-2.0 - 3.0));
    }
}
