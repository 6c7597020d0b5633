use super::applicability::{exact_spectrum_exists, NumberClass, NumberProfile};
use super::Family;
use crate::error::{Error, Result};
use crate::linalg::{Spectrum, CLUSTER_TOL};
use crate::numtheory::ramanujan_row;
use crate::scalar::{unit_scale, Real};

fn int<T: Real>(v: i64) -> T {
    T::from_int(v)
}

fn wide<T: Real>(v: i128) -> T {
    T::from_i128(v).expect("value representable in scalar type")
}

/// Which expression to use for the radical in the prime-power distance
/// spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceRadical {
    /// `sqrt(p^{2m} + 2p^m - 4p^{m-1} + 1)`: the root of the characteristic
    /// quadratic. Agrees with the dense oracle.
    Characteristic,
    /// `sqrt(p^{2m} + 4p^{2m-1} - 12p^{2m-2} + 2p^m - 4p^{m-1} + 1)`: coincides
    /// with `Characteristic` only at `p = 3`.
    Stated,
}

/// Distance spectrum of G_{p^m} for odd `p`.
pub fn prime_power_distance_spectrum<T: Real>(p: u64, m: u32, radical: DistanceRadical) -> Result<Spectrum<T>> {
    check_odd_prime_power(p, m)?;
    let (pp, k) = (p.pow(m) as i128, p.pow(m - 1) as i128);
    let pi = p as i128;
    let x2 = pp + 2 * k - 3;
    let radicand = match radical {
        DistanceRadical::Characteristic => pp * pp + 2 * pp - 4 * k + 1,
        DistanceRadical::Stated => pp * pp + 4 * pp * pp / pi - 12 * k * k + 2 * pp - 4 * k + 1,
    };
    let y2 = wide::<T>(radicand).sqrt();
    let half = T::from_real(0.5);
    let (pu, ku) = (p as usize, k as usize);
    Ok(Spectrum::from_multiplicities([
        (wide(-1 - k), (pu - 1) / 2),
        (int(-2), ku - 1),
        (int(-1), (pu - 1) * (ku - 1)),
        ((wide::<T>(x2) - y2) * half, 1),
        (wide(k - 1), (pu - 3) / 2),
        ((wide::<T>(x2) + y2) * half, 1),
    ]))
}

fn check_odd_prime_power(p: u64, m: u32) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) || m == 0 {
        return Err(Error::Inconsistent(format!("{p}^{m} is not an odd prime power")));
    }
    Ok(())
}

fn prime_power_signless<T: Real>(p: u64, m: u32) -> Spectrum<T> {
    let (pp, k) = (p.pow(m) as i128, p.pow(m - 1) as i128);
    let x1 = 3 * pp - 4 * k - 2;
    let y1 = wide::<T>((pp - 2) * (pp - 2) + 8 * k).sqrt();
    let half = T::from_real(0.5);
    let (pu, ku, ppu) = (p as usize, k as usize, pp as usize);
    Spectrum::from_multiplicities([
        (wide(pp - 2 * k - 2), (pu - 3) / 2),
        ((wide::<T>(x1) - y1) * half, 1),
        (wide(pp - k - 2), ppu + 1 - ku - pu),
        (wide(pp - k), ku - 1),
        (wide(pp - 2), (pu - 1) / 2),
        ((wide::<T>(x1) + y1) * half, 1),
    ])
}

fn prime_power_signless_complement<T: Real>(p: u64, m: u32) -> Spectrum<T> {
    let k = p.pow(m - 1) as i64;
    let (pu, ku) = (p as usize, k as usize);
    Spectrum::from_multiplicities([
        (T::zero(), (pu - 1) / 2),
        (int(k - 2), ku - 1),
        (int(k), (pu - 1) * (ku - 1)),
        (int(2 * k - 2), 1),
        (int(2 * k), (pu - 1) / 2),
    ])
}

fn prime_power_distance_signless<T: Real>(p: u64, m: u32) -> Spectrum<T> {
    let (pp, k) = (p.pow(m) as i128, p.pow(m - 1) as i128);
    let x3 = 3 * pp + 4 * k - 6;
    let y3 = wide::<T>(pp * pp + 4 * pp - 8 * k + 4).sqrt();
    let half = T::from_real(0.5);
    let (pu, ku) = (p as usize, k as usize);
    Spectrum::from_multiplicities([
        (wide(pp - 2), (pu - 1) / 2),
        (wide(pp + k - 4), ku - 1),
        (wide(pp + k - 2), (pu - 1) * (ku - 1)),
        ((wide::<T>(x3) - y3) * half, 1),
        (wide(pp + 2 * k - 2), (pu - 3) / 2),
        ((wide::<T>(x3) + y3) * half, 1),
    ])
}

/// Laplacian eigenvalues of G_n: `φ ∓ c(k, n)` split at `k = (n-1)/2` for odd
/// `n`; `φ - c(k, n)` for even `n` (regular case).
fn laplacian_values(profile: &NumberProfile, c: &[i64]) -> Vec<i64> {
    let (n, phi) = (profile.n as usize, profile.phi as i64);
    if profile.is_even() {
        return c.iter().map(|&ck| phi - ck).collect();
    }
    (0..n)
        .map(|k| if 2 * k < n { phi - c[k] } else { phi + c[k] })
        .collect()
}

fn from_ints<T: Real>(values: impl IntoIterator<Item = i64>) -> Spectrum<T> {
    Spectrum::from_values(values.into_iter().map(int).collect())
}

/// Non-principal even-n terms: every `k` except `0` and `n/2`.
fn even_nonprincipal(c: &[i64]) -> impl Iterator<Item = i64> + '_ {
    let half = c.len() / 2;
    c.iter()
        .enumerate()
        .filter(move |&(k, _)| k != 0 && k != half)
        .map(|(_, &ck)| ck)
}

fn no_closed_form(family: Family, n: u64) -> Error {
    Error::NoClosedForm {
        family: family.name(),
        n,
    }
}

/// Exact spectrum of `family` on G_n (or its complement).
pub fn cf_spectrum<T: Real>(family: Family, n: u64) -> Result<Spectrum<T>> {
    let profile = NumberProfile::new(n)?;
    if !exact_spectrum_exists(family, &profile) {
        return Err(no_closed_form(family, n));
    }
    let c = ramanujan_row(n)?;
    let (ni, phi) = (n as i64, profile.phi as i64);
    let spectrum = match (family, profile.class) {
        (Family::Signless, NumberClass::OddPrimePower { p, m }) => prime_power_signless(p, m),
        (Family::Signless, _) => from_ints(c.iter().map(|&ck| phi + ck)),

        (Family::SignlessComplement, NumberClass::OddPrimePower { p, m }) => {
            prime_power_signless_complement(p, m)
        }
        // Even n: the all-ones vector gives 2(n - 1 - φ).
        (Family::SignlessComplement, _) => from_ints(
            std::iter::once(2 * ni - 2 - 2 * phi).chain(c[1..].iter().map(|&ck| ni - phi - ck - 2)),
        ),

        (Family::Laplacian, _) => from_ints(laplacian_values(&profile, &c)),

        (Family::Distance, NumberClass::OddPrimePower { p, m }) => {
            prime_power_distance_spectrum(p, m, DistanceRadical::Characteristic)?
        }
        (Family::Distance, NumberClass::PowerOfTwo { .. }) => from_ints(
            [3 * ni / 2 - 2, ni / 2 - 2]
                .into_iter()
                .chain(std::iter::repeat_n(-2, n as usize - 2)),
        ),
        (Family::Distance, NumberClass::EvenWithOddPrime) => from_ints(
            [5 * ni / 2 - 2 * (phi + 1), 2 * (phi - 1) - ni / 2]
                .into_iter()
                .chain(even_nonprincipal(&c).map(|ck| -2 - 2 * ck)),
        ),

        (Family::DistanceLaplacian, NumberClass::PowerOfTwo { .. }) => from_ints(
            [ni / 2 - phi, 3 * ni / 2 - phi]
                .into_iter()
                .chain(std::iter::repeat_n(2 * ni - phi, n as usize - 2)),
        ),
        (Family::DistanceLaplacian, NumberClass::EvenWithOddPrime) => from_ints(
            [0, 3 * ni - 4 * phi]
                .into_iter()
                .chain(even_nonprincipal(&c).map(|ck| 5 * ni / 2 - 2 * phi + 2 * ck)),
        ),
        (Family::DistanceLaplacian, _) => {
            // Odd n: 2n - μ over the nonzero Laplacian eigenvalues, plus 0.
            let nu = n as usize;
            from_ints(std::iter::once(0).chain((1..nu).map(|k| {
                if 2 * k < nu {
                    2 * ni + c[k] - phi
                } else {
                    2 * ni - c[k] - phi
                }
            })))
        }

        (Family::DistanceSignless, NumberClass::OddPrimePower { p, m }) => prime_power_distance_signless(p, m),
        (Family::DistanceSignless, NumberClass::PowerOfTwo { .. }) => from_ints(
            [7 * ni / 2 - phi - 4, 5 * ni / 2 - phi - 4]
                .into_iter()
                .chain(std::iter::repeat_n(2 * ni - phi - 4, n as usize - 2)),
        ),
        (Family::DistanceSignless, NumberClass::EvenWithOddPrime) => from_ints(
            [5 * ni - 4 * phi - 4, 2 * ni - 4]
                .into_iter()
                .chain(even_nonprincipal(&c).map(|ck| 5 * ni / 2 - 2 * phi - 4 - 2 * ck)),
        ),

        _ => return Err(no_closed_form(family, n)),
    };
    debug_assert_eq!(spectrum.order(), n as usize);
    Ok(spectrum)
}

/// The two gcd-pattern circulants of Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdMatrix {
    /// `m_ij = 1` iff `gcd(i - j, n) = 1`.
    M,
    /// `n_ij = 1` iff `gcd(i - j, n) != 1`.
    N,
}

/// Eigenvalues of `M` or `N` from Ramanujan sums.
pub fn mn_matrix_eigenvalues<T: Real>(which: GcdMatrix, n: u64) -> Result<Spectrum<T>> {
    let c = ramanujan_row(n)?;
    let phi = c[0];
    Ok(match which {
        GcdMatrix::M => from_ints(c),
        GcdMatrix::N => from_ints(
            std::iter::once(n as i64 - 1 - phi).chain(c[1..].iter().map(|&ck| -ck - 1)),
        ),
    })
}

/// Distance Laplacian spectrum of a connected diameter-≤2 graph from its
/// Laplacian spectrum: `{0} ∪ {2n - μ : μ ≠ 0}`.
pub fn dl_from_laplacian<T: Real>(laplacian: &Spectrum<T>, n: u64) -> Result<Spectrum<T>> {
    let tol = T::from_real(CLUSTER_TOL);
    let values = laplacian.values();
    let zeros = values.iter().filter(|v| v.abs() < tol * unit_scale(**v)).count();
    match zeros {
        0 => return Err(Error::MissingZeroEigenvalue),
        1 => {}
        z => {
            return Err(Error::Inconsistent(format!(
                "Laplacian has {z} zero eigenvalues; graph is disconnected"
            )))
        }
    }
    let two_n = int::<T>(2 * n as i64);
    Ok(Spectrum::from_values(
        values
            .into_iter()
            .map(|mu| if mu.abs() < tol { T::zero() } else { two_n - mu })
            .collect(),
    ))
}
