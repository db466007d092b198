//! Text formats for tableaux, graphs and Hamiltonians, plus atomic writes.
//!
//! All formats are line oriented. Blank lines and lines starting with `#`
//! are ignored unless noted; errors report 1-based line numbers.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use stabtherm_core::coeff::{format_rational, parse_rational};
use stabtherm_core::{Graph, PauliHamiltonian, PauliString, StabilizerTableau};

use crate::error::{Error, Result};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format { line, message: message.into() }
}

/// Content lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, s: &str) -> Result<usize> {
    let v = s.strip_prefix("N=").or_else(|| s.strip_prefix("N =")).ok_or_else(|| format_err(line, "expected header `N=<n>`"))?;
    let n: usize = v.trim().parse().map_err(|_| format_err(line, format!("bad qubit count `{}`", v.trim())))?;
    if n == 0 {
        return Err(format_err(line, "N must be positive"));
    }
    Ok(n)
}

/// `N=<n>` followed by one Pauli string per line.
pub fn parse_tableau(text: &str) -> Result<StabilizerTableau> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| format_err(1, "empty tableau file"))?;
    let n = parse_header(l0, head)?;
    let mut gens = Vec::new();
    let mut line_of = Vec::new();
    for (ln, s) in lines {
        gens.push(PauliString::parse(s, n).map_err(|e| format_err(ln, e.to_string()))?);
        line_of.push(ln);
    }
    StabilizerTableau::from_generators(&gens).map_err(|e| {
        use stabtherm_core::Error as C;
        let at = match e {
            C::NonHermitianGenerator(i) | C::Dependent(i) => line_of.get(i).copied(),
            C::NonCommuting(_, j) => line_of.get(j).copied(),
            _ => None,
        };
        match at {
            Some(line) => format_err(line, e.to_string()),
            None => Error::Core(e),
        }
    })
}

pub fn write_tableau(t: &StabilizerTableau) -> String {
    let mut s = format!("N={}\n", t.n_qubits());
    for g in t.generators() {
        writeln!(s, "{g}").unwrap();
    }
    s
}

/// `N=<n>` followed by one `i j` edge per line (1-based).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| format_err(1, "empty graph file"))?;
    let n = parse_header(l0, head)?;
    let mut edges = Vec::new();
    for (ln, s) in lines {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let [a, b] = parts.as_slice() else {
            return Err(format_err(ln, "expected `i j`"));
        };
        let parse = |t: &str| -> Result<usize> {
            let v: usize = t.parse().map_err(|_| format_err(ln, format!("bad vertex `{t}`")))?;
            if v == 0 || v > n {
                return Err(format_err(ln, format!("vertex {v} out of range 1..={n}")));
            }
            Ok(v - 1)
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a == b {
            return Err(format_err(ln, format!("self-loop at vertex {}", a + 1)));
        }
        edges.push((a, b));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("N={}\n", g.n_vertices());
    for (a, b) in g.edges() {
        writeln!(s, "{} {}", a + 1, b + 1).unwrap();
    }
    s
}

/// Graphviz rendering with 1-based vertex labels.
pub fn graph_to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n  layout=circo;\n");
    for v in 0..g.n_vertices() {
        writeln!(s, "  {};", v + 1).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(s, "  {} -- {};", a + 1, b + 1).unwrap();
    }
    s.push_str("}\n");
    s
}

/// One `coefficient<TAB>PauliString` line per term. The qubit count comes
/// from `n`, else from a `# N=<n>` comment, else from the largest site
/// mentioned.
pub fn parse_hamiltonian(text: &str, n: Option<usize>) -> Result<PauliHamiltonian> {
    let header_n = text.lines().enumerate().find_map(|(i, l)| {
        let rest = l.trim().strip_prefix('#')?.trim();
        rest.starts_with("N=").then(|| parse_header(i + 1, rest))
    });
    let header_n = header_n.transpose()?;
    let rows: Vec<(usize, &str, &str)> = content_lines(text)
        .map(|(ln, s)| {
            let (c, p) = s
                .split_once('\t')
                .or_else(|| s.split_once(char::is_whitespace))
                .ok_or_else(|| format_err(ln, "expected `coefficient<TAB>Pauli string`"))?;
            Ok((ln, c.trim(), p.trim()))
        })
        .collect::<Result<_>>()?;
    let n = match n.or(header_n) {
        Some(n) => n,
        None => {
            let mut m = 0;
            for (ln, _, p) in &rows {
                m = m.max(PauliString::max_site_in(p).map_err(|e| format_err(*ln, e.to_string()))?);
            }
            if m == 0 {
                return Err(format_err(1, "cannot infer N; add a `# N=<n>` line"));
            }
            m
        }
    };
    let mut h = PauliHamiltonian::new(n);
    for (ln, c, p) in rows {
        let coeff = parse_rational(c).map_err(|e| format_err(ln, e.to_string()))?;
        let pauli = PauliString::parse(p, n).map_err(|e| format_err(ln, e.to_string()))?;
        h.add_term(&pauli, coeff).map_err(|e| format_err(ln, e.to_string()))?;
    }
    Ok(h)
}

pub fn write_hamiltonian(h: &PauliHamiltonian) -> String {
    let mut s = format!("# N={}\n", h.n_qubits());
    for (p, c) in h.terms() {
        writeln!(s, "{}\t{}", format_rational(c), p).unwrap();
    }
    s
}

/// Writes `bytes` to `path` through a temporary file in the same directory
/// and an atomic rename.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.flush().map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use stabtherm_core::coeff::{int, ratio};

    #[test]
    fn tableau_round_trip() {
        let t = Graph::g1(8).unwrap().to_stabilizer();
        let text = write_tableau(&t);
        assert!(text.starts_with("N=8\n"));
        assert_eq!(parse_tableau(&text).unwrap(), t);
    }

    #[test]
    fn tableau_errors_carry_lines() {
        let err = parse_tableau("N=2\nX1 X2\n\nX1 Q2\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 4, .. }), "{err}");
        let err = parse_tableau("N=2\nX1 X2\nZ1\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }), "{err}");
        assert!(matches!(parse_tableau("X1\n").unwrap_err(), Error::Format { line: 1, .. }));
        assert!(matches!(parse_tableau("N=2\nX1 X2\n"), Err(Error::Core(stabtherm_core::Error::GeneratorCount { .. }))));
    }

    #[test]
    fn graph_round_trip_and_dot() {
        let g = Graph::g2(7).unwrap();
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        let dot = graph_to_dot(&g, "g2");
        assert!(dot.contains("1 -- 4;"));
        assert!(matches!(parse_graph("N=3\n1 1\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(parse_graph("N=3\n1 4\n"), Err(Error::Format { line: 2, .. })));
    }

    #[test]
    fn hamiltonian_round_trip() {
        let h = stabtherm_core::models::g2_hamiltonian(5, &ratio(1, 3), &int(-2), &ratio(5, 7)).unwrap();
        let text = write_hamiltonian(&h);
        assert_eq!(parse_hamiltonian(&text, None).unwrap(), h);
        let h2 = parse_hamiltonian("0.25\tZ1 Z3\n-1/2\tX2\n", None).unwrap();
        assert_eq!(h2.n_qubits(), 3);
        assert_eq!(h2.coefficient(&PauliString::parse("Z1 Z3", 3).unwrap()), ratio(1, 4));
        assert!(matches!(parse_hamiltonian("1\tZ1\nabc\tX1\n", None), Err(Error::Format { line: 2, .. })));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("sub/out.txt");
        atomic_write(&p, b"one").unwrap();
        atomic_write(&p, b"two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(p.parent().unwrap()).unwrap().count(), 1);
    }
}
