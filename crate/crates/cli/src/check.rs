//! The `check` subcommand: every route to `nu` on one `(n, d)` slice.

use std::io::Write;
use std::time::Instant;

use nary_core::oracles::{brute_character, classical_binary_nu, strip_decompose};
use nary_core::{expand_r, nu_from_series, Count, Engine, Weight};

use crate::output::{Format, Method, OutputRecord};
use crate::Failure;

/// Returns whether all methods agreed for every `k <= kmax`. Plain output is
/// written directly; other formats append to `records`.
pub fn run<W: Write>(
    engine: &Engine,
    out: &mut W,
    format: Format,
    records: &mut Vec<OutputRecord>,
    (n, d): (usize, u32),
    kmax: u32,
) -> Result<bool, Failure> {
    let limits = engine.limits();
    let series = expand_r(n, d, kmax, limits)?;
    let mut agree = true;

    for k in 0..=kmax {
        let mut results: Vec<(Method, Count, f64)> = Vec::new();
        let mut timed = |method: Method,
                         f: &mut dyn FnMut() -> Result<Count, Failure>|
         -> Result<(), Failure> {
            let start = Instant::now();
            let value = f()?;
            results.push((method, value, start.elapsed().as_secs_f64() * 1e3));
            Ok(())
        };

        timed(Method::Theorem1, &mut || Ok(engine.nu(n, d, k)?))?;
        timed(Method::Series, &mut || {
            Ok(nu_from_series(&series, k, limits)?)
        })?;
        if n == 3 {
            timed(Method::Ternary, &mut || Ok(engine.nu_ternary(d, k)?))?;
        }
        if n == 2 {
            timed(Method::OracleCayleySylvester, &mut || {
                Ok(classical_binary_nu(d, k))
            })?;
        }

        let mut character_ok = true;
        match brute_character(n, d, k, limits) {
            Ok(table) => {
                for (mu, m) in &table.multiplicities {
                    if engine.c(n, d, k, mu)? != *m {
                        eprintln!("nary: n={n} d={d} k={k}: multiplicity of {mu} disagrees with enumeration");
                        character_ok = false;
                    }
                }
                timed(Method::OracleStrip, &mut || {
                    Ok(strip_decompose(&table)
                        .remove(&Weight::zero(n))
                        .unwrap_or_default())
                })?;
            }
            Err(e) if e.is_resource_limit() => {
                eprintln!("nary: n={n} d={d} k={k}: skipping enumeration oracles ({e})");
            }
            Err(e) => return Err(e.into()),
        }

        let reference = results[0].1.clone();
        let row_ok = character_ok && results.iter().all(|(_, v, _)| *v == reference);
        agree &= row_ok;

        if format == Format::Plain {
            let cells: Vec<String> = results
                .iter()
                .map(|(m, v, _)| format!("{}={v}", m.tag()))
                .collect();
            writeln!(
                out,
                "n={n} d={d} k={k} {} character={} {}",
                cells.join(" "),
                if character_ok { "ok" } else { "MISMATCH" },
                if row_ok { "ok" } else { "DISAGREE" }
            )?;
        } else {
            records.extend(results.into_iter().map(|(method, v, ms)| OutputRecord {
                n,
                d,
                k,
                lambda: None,
                mu: None,
                result: v.to_string(),
                elapsed_ms: ms,
                method,
            }));
        }
    }
    Ok(agree)
}
