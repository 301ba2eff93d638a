use std::path::Path;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::operators::problem::{ProblemSpec, RidgeNode, SmoothProblem};

/// Loads a LIBSVM-format text file (`label index:value ...`, 1-based indices)
/// into a dense regression problem with rows split contiguously over `nodes`.
pub fn load_libsvm(path: &Path, reg: f64, nodes: usize) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut rows: Vec<(f64, Vec<(usize, f64)>)> = Vec::new();
    let mut max_index = 0usize;
    for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let label: f64 = tokens
            .next()
            .expect("non-empty line has a first token")
            .parse()
            .map_err(|_| format_err(path, line_no, "label is not a number"))?;
        let mut features = Vec::new();
        for token in tokens {
            let (idx_str, val_str) = token
                .split_once(':')
                .ok_or_else(|| format_err(path, line_no, "expected index:value pair"))?;
            let index: usize = idx_str
                .parse()
                .map_err(|_| format_err(path, line_no, "feature index is not an integer"))?;
            if index == 0 {
                return Err(format_err(
                    path,
                    line_no,
                    "feature indices are 1-based; index 0 is not allowed",
                ));
            }
            let value: f64 = val_str
                .parse()
                .map_err(|_| format_err(path, line_no, "feature value is not a number"))?;
            max_index = max_index.max(index);
            features.push((index - 1, value));
        }
        rows.push((label, features));
    }
    if rows.is_empty() {
        return Err(format_err(path, 0, "file contains no data rows"));
    }
    if nodes == 0 || rows.len() < nodes {
        return Err(Error::invalid_config(format!(
            "{} rows cannot be split over {nodes} nodes",
            rows.len()
        )));
    }

    let d = max_index;
    let m = rows.len();
    let mut features = DMatrix::zeros(m, d);
    let mut targets = DVector::zeros(m);
    for (r, (label, feats)) in rows.iter().enumerate() {
        targets[r] = *label;
        for (c, v) in feats {
            features[(r, *c)] = *v;
        }
    }

    let mut node_list = Vec::with_capacity(nodes);
    let base = m / nodes;
    let extra = m % nodes;
    let mut start = 0;
    for i in 0..nodes {
        let count = base + usize::from(i < extra);
        node_list.push(RidgeNode::new(
            features.rows(start, count).into_owned(),
            targets.rows(start, count).into_owned(),
        )?);
        start += count;
    }
    let problem = ProblemSpec::Smooth(SmoothProblem::Ridge {
        nodes: node_list,
        reg,
    });
    problem.validate()?;
    Ok(problem)
}

fn format_err(path: &Path, line: usize, message: &str) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        line,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn parses_sparse_rows_densely() {
        let f = write_temp("1 1:2.0 3:1.0\n");
        let problem = load_libsvm(f.path(), 0.1, 1).unwrap();
        assert_eq!(problem.dim(), 3);
        let smooth = problem.smooth().unwrap();
        // Gram of the single row [2, 0, 1] divided by m = 1.
        let g = smooth.global_hessian();
        assert_eq!(g[(0, 0)], 4.0 + 0.1);
        assert_eq!(g[(0, 2)], 2.0);
        assert_eq!(g[(1, 1)], 0.1);
    }

    #[test]
    fn splits_rows_across_nodes() {
        let f = write_temp("1 1:1.0\n-1 1:2.0\n");
        let problem = load_libsvm(f.path(), 0.1, 2).unwrap();
        assert_eq!(problem.num_nodes(), Some(2));
    }

    #[test]
    fn rejects_zero_index() {
        let f = write_temp("1 0:2.0\n");
        let err = load_libsvm(f.path(), 0.1, 1).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("1-based"), "{msg}");
        assert!(msg.contains(":1:"), "{msg}");
    }

    #[test]
    fn rejects_malformed_line_with_line_number() {
        let f = write_temp("1 1:1.0\n-1 broken\n");
        let err = load_libsvm(f.path(), 0.1, 1).unwrap_err();
        assert!(err.to_string().contains(":2:"), "{err}");
    }

    #[test]
    fn rejects_empty_file() {
        let f = write_temp("");
        assert!(load_libsvm(f.path(), 0.1, 1).is_err());
    }
}
