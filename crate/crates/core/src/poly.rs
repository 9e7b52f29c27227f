//! Univariate polynomials, just enough to find eigenvalues in the base
//! field. Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::Rng;

use crate::field::{Field, Scalar};

/// Largest integer whose divisors are enumerated when looking for
/// rational roots.
const MAX_FACTOR: u64 = 1 << 40;

type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut r = a.to_vec();
    let lead = inv_mod(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() {
        let c = r.last().expect("nonempty") * lead % p;
        let shift = r.len() - b.len();
        for (i, &x) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * x % p) % p;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&trim(out), m, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fp {
    let mut r = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(&r, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = inv_mod(l, p);
        for x in &mut a {
            *x = *x * inv % p;
        }
    }
    a
}

fn sub_poly(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

/// One root of a monic polynomial that is a product of distinct linear
/// factors.
fn split_root<R: Rng>(g: &[u64], p: u64, rng: &mut R) -> u64 {
    let mut g = g.to_vec();
    while g.len() > 2 {
        if p == 2 {
            // both elements are roots of x^2 - x
            return if g[0] == 0 { 0 } else { 1 };
        }
        let a = rng.gen_range(0..p);
        let h = pow_poly_mod(&[a, 1], (p - 1) / 2, &g, p);
        let d = gcd(&g, &sub_poly(&h, &[1], p), p);
        if d.len() > 1 && d.len() < g.len() {
            g = if d.len() <= g.len() / 2 + 1 {
                d
            } else {
                divide_exact(&g, &d, p)
            };
        }
    }
    // g = x + c
    (p - g[0]) % p
}

fn divide_exact(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut r = a.to_vec();
    let mut q = vec![0; a.len() - b.len() + 1];
    let lead = inv_mod(*b.last().expect("nonzero"), p);
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1] * lead % p;
        q[k] = c;
        for (i, &x) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * x % p) % p;
        }
    }
    q
}

fn roots_fp<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Option<u64> {
    if f.len() < 2 {
        return None;
    }
    // gcd(f, x^p - x) collects the distinct roots in F_p
    let xp = pow_poly_mod(&[0, 1], p, f, p);
    let g = gcd(f, &sub_poly(&xp, &[0, 1], p), p);
    (g.len() >= 2).then(|| split_root(&g, p, rng))
}

fn is_power_of_linear(f: &[Scalar], root: &Scalar) -> bool {
    // (x - root)^n has coefficients binomial(n, k) (-root)^(n-k)
    let n = f.len() - 1;
    let field = root.field();
    let mut pow = vec![field.one()];
    for _ in 0..n {
        let mut next = vec![field.zero(); pow.len() + 1];
        for (i, c) in pow.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= &(c * root);
        }
        pow = next;
    }
    let lead = f[n].clone();
    pow.iter().zip(f).all(|(a, b)| &(a * &lead) == b)
}

fn eval(f: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in f.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= MAX_FACTOR)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn rational_root(f: &[Scalar]) -> Option<Scalar> {
    let field = Field::Rationals;
    if f[0].is_zero() {
        return Some(field.zero());
    }
    // clear denominators
    let mut denom = BigInt::one();
    for c in f {
        let (_, d) = c.as_rational_parts();
        denom = denom.lcm(&d);
    }
    let ints: Vec<BigInt> = f
        .iter()
        .map(|c| {
            let (n, d) = c.as_rational_parts();
            n * (&denom / d)
        })
        .collect();
    let num_divs = divisors(&ints[0])?;
    let den_divs = divisors(ints.last().expect("nonconstant"))?;
    for s in &den_divs {
        for r in &num_divs {
            for sign in [1, -1] {
                let cand = Scalar::Q(BigRational::new(r * sign, s.clone()));
                if eval(f, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// A root `λ` in the base field such that `f ≠ c (x - λ)^n`, when one can
/// be found. Such a `λ` makes `x - λ` neither nilpotent nor invertible on
/// any module where `f` is the minimal polynomial of `x`.
pub(crate) fn splitting_root<R: Rng>(f: &[Scalar], rng: &mut R) -> Option<Scalar> {
    if f.len() < 3 {
        return None;
    }
    let field = f[0].field();
    let root = match field {
        Field::Fp(p) => {
            let coeffs: Fp = f
                .iter()
                .map(|c| match c {
                    Scalar::Fp { v, .. } => *v,
                    Scalar::Q(_) => unreachable!("field mismatch"),
                })
                .collect();
            let inv = inv_mod(*coeffs.last().expect("nonempty"), p);
            let monic: Fp = coeffs.iter().map(|c| c * inv % p).collect();
            field.from_i64(roots_fp(&monic, p, rng)? as i64)
        }
        Field::Rationals => rational_root(f)?,
    };
    (!is_power_of_linear(f, &root)).then_some(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::generator;

    fn poly(field: Field, cs: &[i64]) -> Vec<Scalar> {
        cs.iter().map(|&c| field.from_i64(c)).collect()
    }

    #[test]
    fn roots_over_fp() {
        let f = Field::default();
        let mut rng = generator(1);
        // (x - 3)(x - 5) = x^2 - 8x + 15
        let r = splitting_root(&poly(f, &[15, -8, 1]), &mut rng).unwrap();
        assert!(r == f.from_i64(3) || r == f.from_i64(5));
        // (x - 2)^2 has no splitting root
        assert_eq!(splitting_root(&poly(f, &[4, -4, 1]), &mut rng), None);
        // x^2 + 1 is irreducible modulo 32003 since 32003 = 3 mod 4
        assert_eq!(splitting_root(&poly(f, &[1, 0, 1]), &mut rng), None);
        // x (x - 1)(x - 2)(x - 7)
        let g = poly(f, &[0, -14, 23, -10, 1]);
        let r = splitting_root(&g, &mut rng).unwrap();
        assert!(eval(&g, &r).is_zero());
    }

    #[test]
    fn roots_over_q() {
        let q = Field::Rationals;
        let mut rng = generator(2);
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let r = splitting_root(&poly(q, &[-3, 5, 2]), &mut rng).unwrap();
        assert!(eval(&poly(q, &[-3, 5, 2]), &r).is_zero());
        assert_eq!(splitting_root(&poly(q, &[-2, 0, 1]), &mut rng), None);
    }

    #[test]
    fn small_prime() {
        let f = Field::Fp(2);
        let mut rng = generator(3);
        let r = splitting_root(&poly(f, &[0, 1, 1]), &mut rng).unwrap();
        assert!(eval(&poly(f, &[0, 1, 1]), &r).is_zero());
    }
}
