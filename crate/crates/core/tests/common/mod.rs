//! Independent reference implementations used as test oracles. They work on
//! plain letter lists and share no code paths with the library beyond the
//! `Letter` and `Word` containers.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use apwidth::{Letter, Sign, Word};

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn cancels(x: Letter, y: Letter) -> bool {
    x.generator() == y.generator() && x.sign() != y.sign()
}

/// Free reduction by repeatedly deleting the leftmost cancelling pair.
pub fn naive_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut v = letters.to_vec();
    loop {
        match (0..v.len().saturating_sub(1)).find(|&i| cancels(v[i], v[i + 1])) {
            Some(i) => {
                v.drain(i..i + 2);
            }
            None => return v,
        }
    }
}

/// Δ from scratch: reduce, cut into maximal runs, compare run lengths.
pub fn naive_delta(letters: &[Letter]) -> i64 {
    let reduced = naive_reduce(letters);
    let mut runs: Vec<i64> = Vec::new();
    let mut prev: Option<u32> = None;
    for l in &reduced {
        if prev == Some(l.generator()) {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
            prev = Some(l.generator());
        }
    }
    let mut total = 0;
    for i in 1..runs.len() {
        total += if runs[i] > runs[i - 1] {
            1
        } else if runs[i] < runs[i - 1] {
            -1
        } else {
            0
        };
    }
    total
}

pub fn letter(i: usize) -> Letter {
    let g = (i / 2) as u32;
    if i.is_multiple_of(2) {
        Letter::new(g, Sign::Pos)
    } else {
        Letter::new(g, Sign::Neg)
    }
}

/// All `(2 rank)^len` words, in lexicographic order.
pub fn all_words(rank: u32, len: usize) -> impl Iterator<Item = Word> {
    let alphabet = 2 * rank as usize;
    let total = alphabet.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut letters = vec![letter(0); len];
        for slot in letters.iter_mut().rev() {
            *slot = letter(code % alphabet);
            code /= alphabet;
        }
        Word::from_letters(letters)
    })
}

pub fn all_words_up_to(rank: u32, max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |len| all_words(rank, len))
}

pub fn is_pal(letters: &[Letter]) -> bool {
    letters.iter().eq(letters.iter().rev())
}

/// Plain BFS over reduced letter lists: fewest factors from `gens` whose
/// product reduces to `target`, up to `max_c`.
pub fn naive_length(gens: &[Vec<Letter>], target: &[Letter], max_c: usize) -> Option<usize> {
    let target = naive_reduce(target);
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Vec::new());
    queue.push_back((Vec::new(), 0usize));
    while let Some((e, d)) = queue.pop_front() {
        if e == target {
            return Some(d);
        }
        if d == max_c {
            continue;
        }
        for g in gens {
            let mut p = e.clone();
            p.extend_from_slice(g);
            let p = naive_reduce(&p);
            if seen.insert(p.clone()) {
                queue.push_back((p, d + 1));
            }
        }
    }
    None
}

/// Reduced images of all words of length `1..=gen_len` within `m` changes
/// of a palindrome, found by brute force over palindromes.
pub fn naive_generators(rank: u32, m: usize, gen_len: usize) -> Vec<Vec<Letter>> {
    let mut out: HashSet<Vec<Letter>> = HashSet::new();
    for len in 1..=gen_len {
        let pals: Vec<Word> = all_words(rank, len)
            .filter(|p| is_pal(p.letters()))
            .collect();
        for x in all_words(rank, len) {
            let near = pals.iter().any(|p| {
                p.letters()
                    .iter()
                    .zip(x.letters())
                    .filter(|(a, b)| a != b)
                    .count()
                    <= m
            });
            if near {
                let r = naive_reduce(x.letters());
                if !r.is_empty() {
                    out.insert(r);
                }
            }
        }
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort();
    v
}
