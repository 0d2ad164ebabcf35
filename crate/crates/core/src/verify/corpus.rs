use crate::polyarith::IntPoly;

/// A test polynomial. `morse` is descriptive metadata (simple critical
/// points with distinct critical values), not something computed here.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub text: &'static str,
    pub morse: bool,
    pub poly: IntPoly,
}

const ENTRIES: [(&str, bool); 8] = [
    ("x", false),
    ("x^2", true),
    ("x^3", false),
    ("x^3 + x", true),
    ("x^3 - 3x", true),
    ("x^4 - 2x^2", false),
    ("x^5 - 5x^3 + 4x", true),
    ("2x^2 + 3x + 1", true),
];

pub fn corpus() -> Vec<CorpusEntry> {
    ENTRIES
        .iter()
        .map(|&(text, morse)| CorpusEntry {
            text,
            morse,
            poly: text.parse().expect("corpus entries parse"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_with_expected_degrees() {
        let degrees: Vec<usize> = corpus().iter().map(|e| e.poly.degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 3, 3, 3, 4, 5, 2]);
    }
}
