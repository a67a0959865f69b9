use super::{MatrixElementRecord, PerturbedEigenvalue, Result, SpectralError};
use std::io::Write;

fn io<E: std::fmt::Display>(e: E) -> SpectralError {
    SpectralError::Io(e.to_string())
}

/// `{:?}` prints the shortest string that round-trips.
fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn write_eigen_csv<W: Write>(rows: &[PerturbedEigenvalue], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "lambda", "bracket_lo", "bracket_hi", "residual"]).map_err(io)?;
    for r in rows {
        w.write_record([
            r.index.to_string(),
            num(r.value),
            num(r.bracket_lo),
            num(r.bracket_hi),
            num(r.residual),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(io)
}

pub fn write_eigen_jsonl<W: Write>(rows: &[PerturbedEigenvalue], mut out: W) -> Result<()> {
    for r in rows {
        let lo = if r.bracket_lo.is_finite() { serde_json::json!(r.bracket_lo) } else { serde_json::json!("-inf") };
        let rec = serde_json::json!({
            "k": r.index, "lambda": r.value, "bracket_lo": lo,
            "bracket_hi": r.bracket_hi, "residual": r.residual,
        });
        writeln!(out, "{rec}").map_err(io)?;
    }
    Ok(())
}

fn zeta_text(z: [i64; 3]) -> String {
    format!("{},{},{}", z[0], z[1], z[2])
}

pub fn write_matrix_csv<W: Write>(rows: &[MatrixElementRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["lambda", "zeta", "mode", "window", "value", "tail_bound"]).map_err(io)?;
    for r in rows {
        w.write_record([
            num(r.lambda),
            zeta_text(r.zeta),
            r.mode.to_string(),
            num(r.window),
            num(r.value),
            num(r.tail_bound),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(io)
}

pub fn write_matrix_jsonl<W: Write>(rows: &[MatrixElementRecord], mut out: W) -> Result<()> {
    for r in rows {
        writeln!(out, "{}", serde_json::to_string(r).map_err(io)?).map_err(io)?;
    }
    Ok(())
}
