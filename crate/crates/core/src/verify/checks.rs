use super::instance::Instance;
use super::{CheckKind, Status, VerificationReport};
use crate::closedforms::{
    cf_bounds, cf_energy, cf_energy_bounds, cf_spectrum, dl_from_laplacian, BoundSet, Family, NumberProfile,
};
use crate::error::{Error, Result};
use crate::graphs::{diameter_formula, transmission_formula, GraphKind, VertexClass};
use crate::linalg::{
    energy, left_circulant, right_circulant, shift_permutation, spectrum_equal, Comparison, MatrixFamily, Spectrum,
};
use crate::numtheory::is_unit;
use crate::scalar::unit_scale;

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / unit_scale(a).max(unit_scale(b))
}

fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NoClosedForm { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Largest rank-wise excursion outside `bounds`, scaled by `max(1, |x|)`.
fn scaled_violation(bounds: &BoundSet<f64>, desc: &[f64]) -> f64 {
    bounds
        .intervals
        .iter()
        .zip(desc)
        .map(|(&(lo, hi), &x)| (lo - x).max(x - hi).max(0.0) / unit_scale(x))
        .fold(0.0, f64::max)
}

fn describe(cmp: &Comparison<f64>) -> (f64, String) {
    match *cmp {
        Comparison::Equal { max_deviation } => (max_deviation, "closed form matches oracle".into()),
        Comparison::ValueMismatch { max_deviation, index } => (
            max_deviation,
            format!("closed form differs from oracle at sorted index {index}"),
        ),
        Comparison::OrderMismatch { left, right } => (
            f64::INFINITY,
            format!("closed form has {left} eigenvalues, oracle {right}"),
        ),
    }
}

impl Instance {
    pub fn check_spectrum(&mut self, family: Family, tol: f64) -> Result<VerificationReport> {
        let n = self.n();
        let Some(cf) = optional(cf_spectrum::<f64>(family, n))? else {
            return Ok(VerificationReport::not_applicable(
                family.name(),
                n,
                CheckKind::Spectrum,
                "no closed-form spectrum",
            ));
        };
        let oracle = self.oracle(family.graph_kind(), family.matrix_family())?;
        let (dev, details) = describe(&spectrum_equal(&cf, &oracle, tol));
        Ok(VerificationReport::graded(family.name(), n, CheckKind::Spectrum, dev, tol, details))
    }

    pub fn check_bounds(&mut self, family: Family, tol: f64) -> Result<VerificationReport> {
        let n = self.n();
        if !family.has_bounds() || n.is_multiple_of(2) || n < 3 {
            return Ok(VerificationReport::not_applicable(
                family.name(),
                n,
                CheckKind::Bounds,
                "eigenvalue bounds are stated for odd n only",
            ));
        }
        let bounds = cf_bounds::<f64>(family, n)?;
        let oracle = self.oracle(family.graph_kind(), family.matrix_family())?;
        let mut dev = scaled_violation(&bounds, &oracle.descending());
        let mut details = format!(
            "{} rank-paired intervals of width {}; oracle excursion {dev:e}",
            bounds.intervals.len(),
            bounds.width().unwrap_or(0.0)
        );
        let mut consistent = true;
        if let Some(cf) = optional(cf_spectrum::<f64>(family, n))? {
            let cmp = spectrum_equal(&cf, &oracle, tol);
            let (cf_dev, note) = describe(&cmp);
            let inside = scaled_violation(&bounds, &cf.descending());
            consistent = cmp.is_equal();
            dev = dev.max(cf_dev).max(inside);
            details.push_str(&format!("; {note}; closed-form excursion {inside:e}"));
        }
        let mut report = VerificationReport::graded(family.name(), n, CheckKind::Bounds, dev, tol, details);
        if !consistent {
            report.status = Status::Fail;
        }
        Ok(report)
    }

    pub fn check_energy(&mut self, family: Family, tol: f64) -> Result<VerificationReport> {
        let n = self.n();
        let exact = optional(cf_energy::<f64>(family, n))?;
        let bounds = if n % 2 == 1 && n >= 3 {
            optional(cf_energy_bounds::<f64>(family, n))?
        } else {
            None
        };
        if exact.is_none() && bounds.is_none() {
            return Ok(VerificationReport::not_applicable(
                family.name(),
                n,
                CheckKind::Energy,
                "no closed-form energy or energy bounds",
            ));
        }

        let (kind, matrix) = (family.graph_kind(), family.matrix_family());
        let shift = self.oracle_shift(kind, matrix)?;
        let direct = energy(&self.oracle(kind, matrix)?, shift).value;
        let mut parts = vec![format!("oracle energy {direct:.12} about {shift:.12}")];
        let mut dev = 0.0f64;
        let mut caveat = false;
        let mut failed = false;

        if let Some(e) = exact {
            let d = relative(e.energy.value, direct).max(relative(e.energy.shift, shift));
            failed |= d > tol;
            dev = dev.max(d);
            parts.push(format!("closed form {:.12}", e.energy.value));
            if let Some(c) = e.caveat {
                caveat = true;
                parts.push(format!("stated corollary gives {}: {}", c.formula_value, c.note));
            }
        }
        if let Some(b) = bounds {
            let v = b.violation(direct) / unit_scale(direct);
            dev = dev.max(v);
            parts.push(format!("energy bounds [{:.12}, {:.12}]", b.lo, b.hi));
            if v > tol {
                let known = family == Family::Distance && !NumberProfile::new(n)?.is_squarefree();
                if known {
                    caveat = true;
                    parts.push("outside the stated energy bounds (known for odd non-squarefree n)".into());
                } else {
                    failed = true;
                    parts.push("outside the stated energy bounds".into());
                }
            }
        }

        Ok(VerificationReport {
            family: family.name().to_owned(),
            n,
            kind: CheckKind::Energy,
            status: match (failed, caveat) {
                (true, _) => Status::Fail,
                (false, true) => Status::Caveat,
                (false, false) => Status::Pass,
            },
            max_deviation: dev,
            details: parts.join("; "),
        })
    }

    /// Structural identities at this `n`; one report each.
    pub fn check_identities(&mut self, tol: f64) -> Result<Vec<VerificationReport>> {
        let n = self.n();
        if n < 3 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                expected: "n >= 3",
            });
        }
        let nu = n as usize;
        let id = |name: &str, dev: f64, details: String| {
            VerificationReport::graded(name, n, CheckKind::Identity, dev, tol, details)
        };
        let mut out = Vec::new();

        let row: Vec<f64> = (0..n).map(|j| if is_unit(j, n) { 1.0 } else { 0.0 }).collect();
        let product = shift_permutation::<f64>(nu).as_matrix() * &right_circulant(&row);
        let dev = product.max_abs_diff(left_circulant(&row)?.as_matrix());
        out.push(id("circulant-left-shift", dev, "unit-indicator row".into()));

        let d = self.distances(GraphKind::Uacg)?.clone();
        let tr = d.transmissions();
        let mut worst = 0u64;
        for (v, &t) in tr.values().iter().enumerate() {
            let expected = transmission_formula(n, VertexClass::of_vertex(n, v as u64)?)?;
            worst = worst.max(t.abs_diff(expected));
        }
        out.push(id("transmission", worst as f64, format!("total transmission {}", tr.total())));
        let diameter = diameter_formula(n)?;
        out.push(id(
            "diameter",
            f64::from(d.diameter().abs_diff(diameter)),
            format!("BFS {}, formula {diameter}", d.diameter()),
        ));

        out.extend(self.trace_identities(tol, tr.total() as f64)?);

        let dl = self.oracle(GraphKind::Uacg, MatrixFamily::DistanceLaplacian)?;
        let scale = unit_scale(dl.max().unwrap_or(0.0));
        let zeros = dl.values().iter().filter(|v| v.abs() <= tol * scale).count();
        let below = (-dl.min().unwrap_or(0.0)).max(0.0) / scale;
        let mut psd = id("distance-laplacian-psd", below, format!("{zeros} zero eigenvalue(s)"));
        if zeros != 1 {
            psd.status = Status::Fail;
        }
        out.push(psd);

        if n.is_multiple_of(2) {
            for matrix in MatrixFamily::ALL {
                let a = self.oracle(GraphKind::Uacg, matrix)?;
                let b = self.oracle(GraphKind::Ucg, matrix)?;
                let (dev, _) = describe(&spectrum_equal(&a, &b, tol));
                out.push(id(
                    &format!("cospectral-{}", matrix.name()),
                    dev,
                    "uacg and ucg oracle spectra".into(),
                ));
            }
            let shift = self.oracle_shift(GraphKind::Uacg, MatrixFamily::DistanceLaplacian)?;
            let led = energy(&dl, shift).value;
            let de = energy(&self.oracle(GraphKind::Uacg, MatrixFamily::Distance)?, 0.0).value;
            let mut dev = relative(led, de);
            let mut details = format!("LE_D {led:.12}, DE {de:.12}");
            if let Some(cf) = optional(cf_energy::<f64>(Family::Distance, n))? {
                dev = dev.max(relative(cf.energy.value, de));
                details.push_str(&format!(", closed form {:.12}", cf.energy.value));
            }
            out.push(id("distance-laplacian-energy", dev, details));
        } else {
            let via_laplacian = dl_from_laplacian(&cf_spectrum::<f64>(Family::Laplacian, n)?, n)?;
            let direct = cf_spectrum::<f64>(Family::DistanceLaplacian, n)?;
            let (dev, details) = describe(&spectrum_equal(&direct, &via_laplacian, tol));
            out.push(id(
                "distance-laplacian-from-laplacian",
                dev,
                details.replace("oracle", "the Laplacian route"),
            ));
        }
        Ok(out)
    }

    /// Closed-form traces against degree and transmission sums.
    fn trace_identities(&mut self, tol: f64, transmission: f64) -> Result<Vec<VerificationReport>> {
        let n = self.n();
        let degrees = 2.0 * self.graph(GraphKind::Uacg)?.edge_count() as f64;
        let targets = [
            (Family::Signless, degrees),
            (Family::Distance, 0.0),
            (Family::DistanceLaplacian, transmission),
            (Family::DistanceSignless, transmission),
        ];
        let mut out = Vec::new();
        for (family, target) in targets {
            let name = format!("trace-{}", family.name());
            out.push(match optional(cf_spectrum::<f64>(family, n))? {
                Some(s) => {
                    let sum = s.sum();
                    VerificationReport::graded(
                        &name,
                        n,
                        CheckKind::Identity,
                        relative(sum, target),
                        tol,
                        format!("closed-form trace {sum}, expected {target}"),
                    )
                }
                None => VerificationReport::not_applicable(&name, n, CheckKind::Identity, "no closed-form spectrum"),
            });
        }
        Ok(out)
    }

    /// Closed form when stated, oracle otherwise.
    pub(crate) fn best_spectrum(&mut self, family: Family) -> Result<(Spectrum<f64>, &'static str)> {
        match optional(cf_spectrum::<f64>(family, self.n()))? {
            Some(s) => Ok((s, "closed form")),
            None => Ok((self.oracle(family.graph_kind(), family.matrix_family())?, "oracle")),
        }
    }
}
