//! Robinson–Schensted row insertion over an arbitrary total order.
//!
//! Letters that compare equal are inserted semistandardly (a letter bumps the
//! leftmost strictly larger entry), so the first row has the length of a
//! longest weakly increasing subsequence and the number of rows equals the
//! length of a longest strictly decreasing subsequence.

use std::cmp::Ordering;

use crate::partition::Partition;

/// Insertion and recording tableaux, rows listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableaux<T> {
    pub insertion: Vec<Vec<T>>,
    pub recording: Vec<Vec<usize>>,
}

impl<T> Tableaux<T> {
    pub fn shape(&self) -> Partition {
        Partition::new(self.insertion.iter().map(Vec::len))
    }
}

/// Runs row insertion on `word`, comparing letters with `cmp`.
pub fn rs_tableaux_by<T, F>(word: &[T], mut cmp: F) -> Tableaux<T>
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut insertion: Vec<Vec<T>> = Vec::new();
    let mut recording: Vec<Vec<usize>> = Vec::new();
    for (step, letter) in word.iter().enumerate() {
        let mut x = letter.clone();
        let mut row = 0;
        loop {
            if row == insertion.len() {
                insertion.push(vec![x]);
                recording.push(vec![step]);
                break;
            }
            let r = &mut insertion[row];
            let j = r.partition_point(|y| cmp(y, &x) != Ordering::Greater);
            if j == r.len() {
                r.push(x);
                recording[row].push(step);
                break;
            }
            x = std::mem::replace(&mut r[j], x);
            row += 1;
        }
    }
    Tableaux { insertion, recording }
}

/// Shape of the insertion tableau of `word` under `cmp`.
pub fn rs_shape_by<T, F>(word: &[T], cmp: F) -> Partition
where
    T: Clone,
    F: FnMut(&T, &T) -> Ordering,
{
    let mut cmp = cmp;
    debug_assert!(is_antisymmetric(word, &mut cmp), "comparison is not a total order");
    rs_tableaux_by(word, cmp).shape()
}

pub fn rs_shape<T: Ord + Clone>(word: &[T]) -> Partition {
    rs_tableaux_by(word, T::cmp).shape()
}

/// Length of a longest strictly decreasing subsequence.
pub fn longest_decreasing_by<T, F>(word: &[T], mut cmp: F) -> usize
where
    F: FnMut(&T, &T) -> Ordering,
{
    // patience sorting on the reversed word, strict piles
    let mut tops: Vec<&T> = Vec::new();
    for x in word.iter().rev() {
        let j = tops.partition_point(|y| cmp(y, x) == Ordering::Less);
        if j == tops.len() {
            tops.push(x);
        } else {
            tops[j] = x;
        }
    }
    tops.len()
}

pub fn longest_decreasing<T: Ord>(word: &[T]) -> usize {
    longest_decreasing_by(word, T::cmp)
}

fn is_antisymmetric<T, F>(word: &[T], cmp: &mut F) -> bool
where
    F: FnMut(&T, &T) -> Ordering,
{
    word.iter().enumerate().all(|(i, a)| word[i..].iter().all(|b| cmp(a, b) == cmp(b, a).reverse()))
}
