use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::parity::Labeling;

/// Known rna numbers: 1 for paths, 2 for cycles, `ceil(k/2)` for the star with
/// `k` leaves and `floor(n/2) * ceil(n/2)` for `K_n`.
pub fn closed_form_rna(family: &FamilySpec) -> Result<usize> {
    family.validate()?;
    match *family {
        FamilySpec::Path(n) if n >= 2 => Ok(1),
        FamilySpec::Cycle(_) => Ok(2),
        FamilySpec::Star(k) => Ok(k.div_ceil(2)),
        FamilySpec::Complete(n) if n >= 2 => Ok((n / 2) * n.div_ceil(2)),
        _ => Err(unsupported(family)),
    }
}

fn unsupported(family: &FamilySpec) -> Error {
    Error::invalid(format!(
        "no closed form for {family}; supported: path n>=2, cycle, star, complete n>=2"
    ))
}

/// Odd labels along the first `ceil(n/2)` vertices, then the even labels.
fn odds_then_evens(n: usize) -> Labeling {
    let half = n.div_ceil(2);
    let labels = (1..=n)
        .map(|i| {
            if i <= half {
                2 * i - 1
            } else if n % 2 == 1 {
                2 * i - (n + 1)
            } else {
                2 * i - n
            }
        })
        .collect();
    Labeling::new(labels).expect("odds-then-evens is a bijection")
}

/// A labeling attaining [`closed_form_rna`] on the family's canonical vertex
/// order.
///
/// Paths and cycles take the odd labels first and the even labels after, so
/// the parity changes once along a path and twice around a cycle. `K_n` uses
/// `f(v) = v + 1`. The star gets an odd center (label 1) and leaves `2..=k+1`,
/// which leaves `floor((k+1)/2) = ceil(k/2)` negative edges.
pub fn proof_labeling(family: &FamilySpec) -> Result<Labeling> {
    closed_form_rna(family)?;
    Ok(match *family {
        FamilySpec::Path(n) | FamilySpec::Cycle(n) => odds_then_evens(n),
        FamilySpec::Star(k) => Labeling::identity(k + 1),
        FamilySpec::Complete(n) => Labeling::identity(n),
        _ => return Err(unsupported(family)),
    })
}
