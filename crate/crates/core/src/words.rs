//! Words over vertex alphabets, the alternation relation, word-to-graph
//! compilation, and bounded witness-word search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Finite sequence of positive integer letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Word> {
        if letters.iter().any(|&l| l == 0) {
            return Err(Error::invalid("letters must be positive integers"));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }

    /// Subsequence keeping only letters in `s`.
    pub fn restrict(&self, s: &BTreeSet<usize>) -> Word {
        Word { letters: self.letters.iter().copied().filter(|l| s.contains(l)).collect() }
    }

    /// Parses either whitespace-separated integer tokens, or — when the
    /// input is a single run of digits 1-9 of length >= 2 — the compact
    /// digit form where every character is one letter (e.g. "14213243").
    pub fn parse(s: &str) -> Result<Word> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len() == 1
            && tokens[0].len() >= 2
            && tokens[0].chars().all(|c| ('1'..='9').contains(&c))
        {
            return Word::new(tokens[0].chars().map(|c| c as usize - '0' as usize).collect());
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for t in tokens {
            let l: usize = t
                .parse()
                .map_err(|_| Error::invalid(format!("malformed letter `{t}`")))?;
            letters.push(l);
        }
        Word::new(letters)
    }

    /// Digit string form, available when every letter is a single digit.
    pub fn to_compact(&self) -> Option<String> {
        if self.letters.iter().all(|&l| (1..=9).contains(&l)) && !self.letters.is_empty() {
            Some(self.letters.iter().map(|l| l.to_string()).collect())
        } else {
            None
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Word file: one word per line, `#` lines ignored.
pub fn read_words(text: &str) -> Result<Vec<Word>> {
    crate::graph::data_lines(text).map(|(_, l)| Word::parse(l)).collect()
}

/// Letters x and y alternate in w: the restriction of w to {x, y} is
/// xyxy... or yxyx... Both letters must occur and differ.
pub fn alternates(w: &Word, x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(Error::invalid(format!("alternation needs distinct letters, got {x} twice")));
    }
    let alphabet = w.alphabet();
    if !alphabet.contains(&x) || !alphabet.contains(&y) {
        return Err(Error::invalid(format!("letters {x}, {y} must both occur in the word")));
    }
    let restricted: Vec<usize> =
        w.letters.iter().copied().filter(|&l| l == x || l == y).collect();
    Ok(restricted.windows(2).all(|p| p[0] != p[1]))
}

/// Graph compiled from a word: vertices are the alphabet relabelled 1..|A|
/// ascending (`letter_of[v - 1]` recovers the letter), edges exactly the
/// alternating pairs.
#[derive(Clone, Debug)]
pub struct WordGraph {
    pub graph: Graph,
    pub letter_of: Vec<usize>,
}

pub fn graph_from_word(w: &Word) -> WordGraph {
    let letter_of: Vec<usize> = w.alphabet().into_iter().collect();
    let mut graph = Graph::new(letter_of.len());
    for i in 0..letter_of.len() {
        for j in i + 1..letter_of.len() {
            if alternates(w, letter_of[i], letter_of[j]).expect("letters from alphabet") {
                graph.add_edge(i + 1, j + 1).expect("distinct new labels");
            }
        }
    }
    WordGraph { graph, letter_of }
}

/// w represents G: the alphabet equals G's vertex set and the alternation
/// graph equals G.
pub fn represents(w: &Word, g: &Graph) -> Result<bool> {
    let expected: BTreeSet<usize> = g.vertices().collect();
    if w.alphabet() != expected {
        return Err(Error::invalid(format!(
            "alphabet {:?} differs from vertex set 1..={}",
            w.alphabet(),
            g.vertex_count()
        )));
    }
    Ok(&graph_from_word(w).graph == g)
}

/// Iterative-deepening search for a k-uniform representing word,
/// k = 1..=k_max. Letters are tried in increasing order at every position,
/// so the first word found is deterministic. Absence up to k_max proves
/// nothing about representability.
pub fn find_representing_word(g: &Graph, k_max: usize, cfg: &Config) -> Result<Option<Word>> {
    let n = g.vertex_count();
    if n > cfg.witness_vertex_cap {
        return Err(Error::limit(format!(
            "witness search cap is {} vertices, graph has {n}",
            cfg.witness_vertex_cap
        )));
    }
    if n == 0 {
        return Ok(Some(Word::empty()));
    }
    for k in 1..=k_max {
        if let Some(w) = search_uniform(g, k) {
            debug_assert!(represents(&w, g).unwrap());
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Pair state while building a word left to right: which of the two letters
/// was seen last, and whether alternation is already broken.
#[derive(Clone, Copy)]
struct PairState {
    last: usize, // 0 = neither yet
    broken: bool,
}

fn search_uniform(g: &Graph, k: usize) -> Option<Word> {
    let n = g.vertex_count();
    let total = n * k;
    let mut counts = vec![0usize; n + 1];
    let mut pairs: BTreeMap<(usize, usize), PairState> = BTreeMap::new();
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.insert((u, v), PairState { last: 0, broken: false });
        }
    }
    let mut word = Vec::with_capacity(total);

    fn place(
        g: &Graph,
        k: usize,
        total: usize,
        word: &mut Vec<usize>,
        counts: &mut [usize],
        pairs: &mut BTreeMap<(usize, usize), PairState>,
    ) -> bool {
        if word.len() == total {
            return true;
        }
        let n = g.vertex_count();
        'letters: for a in 1..=n {
            if counts[a] == k {
                continue;
            }
            // apply letter a, recording pair-state changes for undo
            let mut changed: Vec<((usize, usize), PairState)> = Vec::new();
            let mut ok = true;
            for b in 1..=n {
                if b == a {
                    continue;
                }
                let key = (a.min(b), a.max(b));
                let st = *pairs.get(&key).unwrap();
                let mut new = st;
                if st.last == a {
                    new.broken = true;
                } else {
                    new.last = a;
                }
                let edge = g.has_edge(a, b);
                if edge && new.broken {
                    ok = false;
                } else if !edge
                    && !new.broken
                    && counts[a] + 1 == k
                    && counts[b] == k
                {
                    // both letters exhausted while still alternating: the
                    // pair would compile to an edge that must not exist
                    ok = false;
                }
                changed.push((key, st));
                pairs.insert(key, new);
                if !ok {
                    for (key, old) in changed {
                        pairs.insert(key, old);
                    }
                    continue 'letters;
                }
            }
            counts[a] += 1;
            word.push(a);
            if place(g, k, total, word, counts, pairs) {
                return true;
            }
            word.pop();
            counts[a] -= 1;
            for (key, old) in changed {
                pairs.insert(key, old);
            }
        }
        false
    }

    if place(g, k, total, &mut word, &mut counts, &mut pairs) {
        Some(Word::new(word).expect("positive letters"))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_word() -> Word {
        Word::parse("14213243").unwrap()
    }

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    #[test]
    fn alternation_on_paper_example() {
        let w = paper_word();
        assert!(alternates(&w, 1, 2).unwrap());
        assert!(!alternates(&w, 1, 3).unwrap());
        // full edge/non-edge profile of C4
        for u in 1..=4usize {
            for v in u + 1..=4 {
                assert_eq!(alternates(&w, u, v).unwrap(), c4().has_edge(u, v));
            }
        }
    }

    #[test]
    fn alternation_is_symmetric_and_checked() {
        let w = Word::parse("2 1 2").unwrap();
        assert!(alternates(&w, 1, 2).unwrap());
        assert_eq!(alternates(&w, 1, 2).unwrap(), alternates(&w, 2, 1).unwrap());
        assert!(alternates(&w, 1, 1).is_err());
        assert!(alternates(&w, 1, 9).is_err());
    }

    #[test]
    fn paper_word_compiles_to_c4() {
        let wg = graph_from_word(&paper_word());
        assert_eq!(wg.graph, c4());
        assert_eq!(wg.letter_of, vec![1, 2, 3, 4]);
    }

    #[test]
    fn permutation_compiles_to_complete() {
        let w = Word::parse("3 1 4 2 5").unwrap();
        assert_eq!(graph_from_word(&w).graph, Graph::complete(5).unwrap());
    }

    #[test]
    fn repeated_single_letter() {
        let w = Word::parse("1 1").unwrap();
        let wg = graph_from_word(&w);
        assert_eq!(wg.graph.vertex_count(), 1);
        assert_eq!(wg.graph.edge_count(), 0);
    }

    #[test]
    fn represents_checks() {
        assert!(represents(&paper_word(), &c4()).unwrap());
        let edge = Graph::with_edges(2, &[(1, 2)]).unwrap();
        assert!(represents(&Word::parse("1 2").unwrap(), &edge).unwrap());
        // alphabet {1,2} against C4's four vertices: precondition failure
        assert!(represents(&Word::parse("1212").unwrap(), &c4()).is_err());
    }

    #[test]
    fn restriction() {
        let w = paper_word();
        let s: BTreeSet<usize> = [1, 2].into_iter().collect();
        assert_eq!(w.restrict(&s), Word::parse("1 2 1 2").unwrap());
        assert_eq!(w.restrict(&w.alphabet()), w);
        assert_eq!(w.restrict(&BTreeSet::new()), Word::empty());
    }

    #[test]
    fn compact_parse_and_print() {
        let w = Word::parse("14213243").unwrap();
        assert_eq!(w.letters(), &[1, 4, 2, 1, 3, 2, 4, 3]);
        assert_eq!(w.to_compact().unwrap(), "14213243");
        assert_eq!(w.to_string(), "1 4 2 1 3 2 4 3");
        let big = Word::parse("12 7 12").unwrap();
        assert_eq!(big.letters(), &[12, 7, 12]);
        assert_eq!(big.to_compact(), None);
        assert!(Word::parse("1 0 2").is_err());
    }

    #[test]
    fn word_file() {
        let ws = read_words("# two words\n1 2 1 2\n14213243\n").unwrap();
        assert_eq!(ws.len(), 2);
        assert_eq!(ws[1], paper_word());
    }

    #[test]
    fn witness_for_c4() {
        let w = find_representing_word(&c4(), 2, &Config::default()).unwrap().unwrap();
        assert!(represents(&w, &c4()).unwrap());
        // 2-uniform
        for l in 1..=4usize {
            assert_eq!(w.letters().iter().filter(|&&x| x == l).count(), 2);
        }
    }

    #[test]
    fn witness_for_k3_is_permutation() {
        let k3 = Graph::complete(3).unwrap();
        let w = find_representing_word(&k3, 1, &Config::default()).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        assert!(represents(&w, &k3).unwrap());
    }

    #[test]
    fn no_witness_for_w5() {
        let w5 = Graph::wheel(5).unwrap();
        assert!(find_representing_word(&w5, 2, &Config::default()).unwrap().is_none());
    }

    #[test]
    fn witness_cap() {
        let g = Graph::new(9);
        assert!(find_representing_word(&g, 1, &Config::default()).is_err());
    }
}
