//! Cross-oracle verification suite for one matroid.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::expand;
use crate::gehrhart::{graded_count, interior_series, reciprocity_check, series, Check};
use crate::harmonic::degree1_dim;
use crate::matroid::{tutte, tutte_thickened, RealizedMatroid, MAX_ELEMENTS};
use crate::zonalg::{external_spec, hilbert, internal_spec, verify_zonotopal};
use crate::zonotope::{lattice_count, tutte_lattice_count};

/// Largest `n * m` for which the zonotopal oracle is run on thickenings.
pub const ZONALG_THICKENING_LIMIT: usize = 12;

/// Runs every oracle comparison for dilates up to `m_max`.
///
/// Errors (non-unimodular input, size guards) abort the suite; a mismatch
/// is reported as a failed [`Check`] with a witness.
pub fn run_suite(m: &RealizedMatroid, m_max: u32) -> Result<Vec<Check>> {
    m.require_unimodular()?;
    let (n, d) = (m.n(), m.d());
    let t = tutte(m);
    let mut checks = Vec::new();

    checks.push(first_failure("lattice points vs tutte at q=1", (1..=m_max).flat_map(|k| [(k, false), (k, true)]), |(k, interior)| {
        let (_, count) = lattice_count(m, k, interior)?;
        let count = BigInt::from(count);
        let stanley = tutte_lattice_count(&t, d, k, interior);
        let at_one = graded_count(m, k, interior)?.value.eval_at_one();
        Ok((count == stanley && count == at_one)
            .then_some(())
            .ok_or_else(|| format!("m={k} interior={interior}: enumerated {count}, tutte {stanley}, graded at q=1 {at_one}")))
    })?);

    if d >= 1 {
        let dilates = (1..=m_max).filter(|k| n * *k as usize <= ZONALG_THICKENING_LIMIT);
        checks.push(first_failure("zonotopal algebra of thickening vs graded count", dilates.flat_map(|k| [(k, false), (k, true)]), |(k, interior)| {
            let thick = m.thicken(k as usize)?;
            let spec = if interior { internal_spec(&thick)? } else { external_spec(&thick)? };
            let alg = hilbert(&spec)?.as_laurent();
            let formula = graded_count(m, k, interior)?.value;
            Ok((alg == formula).then_some(()).ok_or_else(|| format!("m={k} interior={interior}: algebra {alg}, formula {formula}")))
        })?);
        checks.push(verify_zonotopal(m)?);
    }

    let s = expand(&series(m)?, m_max as usize);
    let si = expand(&interior_series(m)?, m_max as usize);
    checks.push(first_failure("series expansion vs counts", 0..=m_max, |k| {
        let want = graded_count(m, k, false)?.value;
        if s[k as usize] != want {
            return Ok(Err(format!("t^{k}: series {}, count {want}", s[k as usize])));
        }
        if k >= 1 {
            let want = graded_count(m, k, true)?.value;
            if si[k as usize] != want {
                return Ok(Err(format!("t^{k}: interior series {}, interior count {want}", si[k as usize])));
            }
        }
        Ok(Ok(()))
    })?);

    checks.push(reciprocity_check(m, m_max)?);

    let dim1 = degree1_dim(m)?;
    let t21 = t.eval(&BigInt::from(2), &BigInt::from(1));
    checks.push(Check::expect_eq("degree-1 dimension vs T(2,1)", &BigInt::from(dim1), &t21));

    let dilates = (1..=m_max).filter(|k| n * *k as usize <= MAX_ELEMENTS);
    checks.push(first_failure("thickening formula", dilates, |k| {
        let direct = tutte(&m.thicken(k as usize)?);
        let formula = tutte_thickened(&t, d, k);
        Ok((direct == formula).then_some(()).ok_or_else(|| format!("m={k}: deletion-contraction {direct}, formula {formula}")))
    })?);

    Ok(checks)
}

fn first_failure<I, T, F>(name: &str, cases: I, mut f: F) -> Result<Check>
where
    I: IntoIterator<Item = T>,
    F: FnMut(T) -> Result<std::result::Result<(), String>>,
{
    for case in cases {
        if let Err(w) = f(case)? {
            return Ok(Check::fail(name, w));
        }
    }
    Ok(Check::pass(name))
}
