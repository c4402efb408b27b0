//! Independent oracles shared by the integration tests and the acceptance
//! run. Nothing here calls the engine it is checking.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use surfgroups::abelian::AbelianGroup;

pub type Affine = [[i64; 3]; 3];

pub fn affine_mul(a: &Affine, b: &Affine) -> Affine {
    let mut out = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|t| a[i][t] * b[t][j]).sum();
        }
    }
    out
}

fn affine_pow(m: &Affine, inv: &Affine, n: i64) -> Affine {
    let mut acc = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let step = if n >= 0 { m } else { inv };
    for _ in 0..n.unsigned_abs() {
        acc = affine_mul(&acc, step);
    }
    acc
}

/// The Klein bottle group as deck transformations of the plane:
/// `al` translates, `be` is a glide reflection. This action is faithful.
pub fn klein_affine(r: i64, s: i64) -> Affine {
    let al = [[1, 0, 1], [0, 1, 0], [0, 0, 1]];
    let al_inv = [[1, 0, -1], [0, 1, 0], [0, 0, 1]];
    let be = [[-1, 0, 0], [0, 1, 1], [0, 0, 1]];
    let be_inv = [[-1, 0, 0], [0, 1, -1], [0, 0, 1]];
    affine_mul(&affine_pow(&al, &al_inv, r), &affine_pow(&be, &be_inv, s))
}

/// Free reduction by deleting adjacent inverse pairs in the order chosen by
/// `pick`, until none remain.
pub fn reduce_in_order(
    mut letters: Vec<(usize, i8)>,
    mut pick: impl FnMut(usize) -> usize,
) -> Vec<(usize, i8)> {
    loop {
        let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
            .filter(|&i| letters[i].0 == letters[i + 1].0 && letters[i].1 == -letters[i + 1].1)
            .collect();
        if spots.is_empty() {
            return letters;
        }
        let i = spots[pick(spots.len())];
        letters.drain(i..i + 2);
    }
}

fn det(m: &[Vec<i64>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0] as i128,
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors, for k = 1..=min(rows, cols).
pub fn determinantal_divisors(m: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = 0i128;
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let minor: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                        .collect();
                    g = g.gcd(&det(&minor));
                }
            }
            g
        })
        .collect()
}

/// `Z^rows / column space`, read off the determinantal divisors.
pub fn cokernel_from_minors(m: &[Vec<i64>], cols: usize) -> AbelianGroup {
    let d = determinantal_divisors(m, cols);
    let rank = d.iter().take_while(|x| **x != 0).count();
    let mut torsion = Vec::new();
    let mut prev = 1i128;
    for &dk in &d[..rank] {
        let f = dk / prev;
        if f != 1 {
            torsion.push(BigInt::from(f));
        }
        prev = dk;
    }
    AbelianGroup {
        free_rank: m.len() - rank,
        torsion,
    }
}

/// `|Hom(Z^rows / col(M), Z/n)|`, counting vectors `x` with `x^T M = 0 mod n`.
pub fn hom_count_brute(m: &[Vec<i64>], cols: usize, n: i64) -> u64 {
    let rows = m.len();
    let total = (n as u64).pow(rows as u32);
    let mut count = 0;
    for code in 0..total {
        let mut x = vec![0i64; rows];
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = (c % n as u64) as i64;
            c /= n as u64;
        }
        if (0..cols).all(|j| (0..rows).map(|i| x[i] * m[i][j]).sum::<i64>().rem_euclid(n) == 0) {
            count += 1;
        }
    }
    count
}

/// Letters `x y a b s` with upper case for inverses.
pub fn b2t_letters(word: &[(usize, i8)], m: i64, n: i64, sigma: bool) -> Vec<char> {
    let mut out: Vec<char> = word
        .iter()
        .map(|&(g, e)| match (g, e) {
            (0, 1) => 'x',
            (0, _) => 'X',
            (1, 1) => 'y',
            _ => 'Y',
        })
        .collect();
    let rep = |c: char, k: i64| {
        std::iter::repeat_n(
            if k >= 0 { c } else { c.to_ascii_uppercase() },
            k.unsigned_abs() as usize,
        )
    };
    out.extend(rep('a', m));
    out.extend(rep('b', n));
    if sigma {
        out.push('s');
    }
    out
}

/// Normal form in `B2(T)` by string rewriting: `S -> B^-1 s`, then push
/// every `s` to the right across the letters using the conjugation rules,
/// collapse `ss -> B`, and finally collect the central letters.
pub fn b2t_rewrite(input: &[char]) -> (Vec<(usize, i8)>, i64, i64, bool) {
    const BIG_B: &str = "xYXy";
    const BIG_B_INV: &str = "YxyX";
    let mut w: Vec<char> = Vec::new();
    for &c in input {
        if c == 'S' {
            w.extend(BIG_B_INV.chars());
            w.push('s');
        } else {
            w.push(c);
        }
    }
    while let Some(i) = (0..w.len().saturating_sub(1))
        .find(|&i| w[i] == 's' && w[i + 1] != 's')
        .or_else(|| (0..w.len().saturating_sub(1)).find(|&i| w[i] == 's'))
    {
        let next = w[i + 1];
        let replacement: String = match next {
            's' => BIG_B.to_string(),
            'x' => format!("{BIG_B}Xas"),
            'X' => format!("Ax{BIG_B_INV}s"),
            'y' => format!("{BIG_B}Ybs"),
            'Y' => format!("By{BIG_B_INV}s"),
            c => format!("{c}s"),
        };
        w.splice(i..i + 2, replacement.chars());
    }
    let sigma = w.last() == Some(&'s');
    let (mut m, mut n) = (0i64, 0i64);
    let mut free = Vec::new();
    for &c in &w {
        match c {
            'a' => m += 1,
            'A' => m -= 1,
            'b' => n += 1,
            'B' => n -= 1,
            'x' => free.push((0usize, 1i8)),
            'X' => free.push((0, -1)),
            'y' => free.push((1, 1)),
            'Y' => free.push((1, -1)),
            _ => {}
        }
    }
    (reduce_in_order(free, |_| 0), m, n, sigma)
}
