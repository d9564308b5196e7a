//! Tensor products of the bimodules over the region rings, as explicit quotients.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use thiserror::Error;

use super::linalg::{RationalMatrix, SparseEchelon, SparseVec};
use crate::label::{target_of, Label};
use crate::sign_words::{Sign, SignWord};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representation size must be at least 2, got {0}")]
    Size(usize),
    #[error("word '{word}' is the zero 1-morphism from label {label}")]
    ZeroWord { word: SignWord, label: Label },
}

/// The tensor product of one bimodule per letter (`+` ↦ column vectors,
/// `-` ↦ row vectors), over the ring of each inner region, presented as a
/// quotient of the plain tensor product.
///
/// Ambient coordinates are mixed radix with the leftmost letter most
/// significant. The empty word is the ring of its region: scalars at 0,
/// `n×n` matrices (index `p·n + q`) at 1.
#[derive(Debug)]
pub struct TensorSpace {
    word: SignWord,
    source: Label,
    n: usize,
    ambient: usize,
    relation_rank: usize,
    /// Ambient indices of the quotient basis (the non-pivot coordinates).
    basis: Vec<usize>,
    /// Image of each ambient basis vector in quotient coordinates.
    images: Vec<SparseVec>,
}

/// Spanning set of the middle-action relations `(h·r)⊗g − h⊗(r·g)` at each
/// `-+` junction, whose middle region carries the matrix ring. Junctions over
/// the scalars give no relations.
pub fn relation_vectors(n: usize, word: &SignWord) -> Vec<SparseVec> {
    let len = word.len();
    let mut out = Vec::new();
    let signs = word.signs();
    for pos in 0..len.saturating_sub(1) {
        if (signs[pos], signs[pos + 1]) != (Sign::Minus, Sign::Plus) {
            continue;
        }
        let outer = n.pow((len - 2) as u32);
        for rest in 0..outer {
            let mut digits = to_digits(rest, n, len - 2);
            digits.splice(pos..pos, [0, 0]);
            let index_of = |i: usize, j: usize, digits: &mut Vec<usize>| {
                digits[pos] = i;
                digits[pos + 1] = j;
                from_digits(digits, n)
            };
            // e^i E_pq = δ_ip e^q and E_pq e_j = δ_qj e_p
            for p in 0..n {
                for q in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if i != p && q != j {
                                continue;
                            }
                            let mut v = SparseVec::new();
                            if i == p {
                                *v.entry(index_of(q, j, &mut digits)).or_insert_with(Rational::zero) += Rational::one();
                            }
                            if q == j {
                                *v.entry(index_of(i, p, &mut digits)).or_insert_with(Rational::zero) -= Rational::one();
                            }
                            v.retain(|_, c| !c.is_zero());
                            if !v.is_empty() {
                                out.push(v);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn to_digits(mut index: usize, n: usize, len: usize) -> Vec<usize> {
    let mut d = vec![0; len];
    for slot in d.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    d
}

pub fn from_digits(digits: &[usize], n: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

impl TensorSpace {
    fn build(n: usize, word: &SignWord, source: Label) -> TensorSpace {
        let ambient = if word.is_empty() && source == Label::One { n * n } else { n.pow(word.len() as u32) };
        let mut echelon = SparseEchelon::new();
        for v in relation_vectors(n, word) {
            echelon.insert(&v);
        }
        let pivots: Vec<usize> = echelon.pivots().collect();
        let basis: Vec<usize> = (0..ambient).filter(|i| pivots.binary_search(i).is_err()).collect();
        let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let images = (0..ambient)
            .map(|a| match echelon.row(a) {
                // e_p ≡ e_p − row_p
                Some(row) => row
                    .iter()
                    .filter(|(&c, _)| c != a)
                    .map(|(c, v)| (position[c], -v.clone()))
                    .collect(),
                None => SparseVec::from([(position[&a], Rational::one())]),
            })
            .collect();
        TensorSpace { word: word.clone(), source, n, ambient, relation_rank: echelon.rank(), basis, images }
    }

    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn source(&self) -> Label {
        self.source
    }

    pub fn target(&self) -> Label {
        target_of(&self.word, self.source).expect("spaces exist only for nonzero words")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether this is the matrix ring itself (the empty word at label 1).
    pub fn is_ring(&self) -> bool {
        self.word.is_empty() && self.source == Label::One
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Ambient index representing quotient basis vector `k`.
    pub fn section(&self, k: usize) -> usize {
        self.basis[k]
    }

    pub fn digits(&self, index: usize) -> Vec<usize> {
        to_digits(index, self.n, self.word.len())
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        from_digits(digits, self.n)
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &SparseVec) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&a, c) in v {
            for (&k, w) in &self.images[a] {
                out[k] += c * w;
            }
        }
        out
    }

    /// The projection as a `dim × ambient_dim` matrix.
    pub fn projection_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim(), self.ambient);
        for (a, image) in self.images.iter().enumerate() {
            for (&k, w) in image {
                m.set(k, a, w.clone());
            }
        }
        m
    }
}

type Slot = Arc<OnceLock<Arc<TensorSpace>>>;

/// Representation data for a fixed matrix size `n`, with tensor spaces built
/// on first use.
#[derive(Debug)]
pub struct RepContext {
    n: usize,
    spaces: Mutex<HashMap<(SignWord, Label), Slot>>,
}

pub fn make_context(n: usize) -> Result<RepContext, RepError> {
    if n < 2 {
        return Err(RepError::Size(n));
    }
    Ok(RepContext { n, spaces: Mutex::new(HashMap::new()) })
}

impl RepContext {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The space of `w` read from `source`; built at most once per key.
    pub fn space_of_word(&self, w: &SignWord, source: Label) -> Result<Arc<TensorSpace>, RepError> {
        if target_of(w, source).is_none() {
            return Err(RepError::ZeroWord { word: w.clone(), label: source });
        }
        let slot = {
            let mut map = self.spaces.lock().unwrap_or_else(|e| e.into_inner());
            map.entry((w.clone(), source)).or_default().clone()
        };
        Ok(slot.get_or_init(|| Arc::new(TensorSpace::build(self.n, w, source))).clone())
    }

    /// Predicted quotient dimension from the source and target labels.
    pub fn predicted_dim(&self, source: Label, target: Label) -> usize {
        match (source, target) {
            (Label::Zero, Label::Zero) => 1,
            (Label::One, Label::One) => self.n * self.n,
            _ => self.n,
        }
    }
}
