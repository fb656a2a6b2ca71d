use std::fmt;

/// A sequence of letter indices.
///
/// Letters are only meaningful relative to an automaton; range checks happen
/// when a word is applied. Rendering goes through the automaton's letter-name
/// table: binary alphabets print as runs of `0`/`1`, larger unnamed alphabets
/// as space-separated `a0 a1 ...` tokens, and named alphabets use the names
/// (concatenated when every name is a single character).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn repeated(letter: usize, times: usize) -> Self {
        Word {
            letters: vec![letter; times],
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.letters.push(letter);
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Renders the word for an alphabet of `n_letters`, optionally named.
    pub fn render(&self, n_letters: usize, names: Option<&[String]>) -> String {
        match names {
            Some(names) => {
                let tokens: Vec<&str> = self.letters.iter().map(|&x| names[x].as_str()).collect();
                if tokens.iter().all(|t| t.chars().count() == 1) {
                    tokens.concat()
                } else {
                    tokens.join(" ")
                }
            }
            None if n_letters <= 2 => self
                .letters
                .iter()
                .map(|&x| char::from(b'0' + x as u8))
                .collect(),
            None => self
                .letters
                .iter()
                .map(|&x| format!("a{x}"))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.letters)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}
