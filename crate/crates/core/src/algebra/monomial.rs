use std::cmp::Ordering;
use std::fmt;

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 12;

/// Exponent vector with cached total degree.
/// The derived `Ord` is only a map key order; term orders live in [`MonoOrder`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono {
    deg: u16,
    e: [u8; MAX_VARS],
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.e[..])
    }
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0u8; MAX_VARS];
        let mut deg = 0u16;
        for (i, &x) in exps.iter().enumerate() {
            assert!(x < 256, "exponent overflow");
            e[i] = x as u8;
            deg += x as u16;
        }
        Mono { deg, e }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u8; MAX_VARS];
        e[i] = 1;
        Mono { deg: 1, e }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.e[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| x as u32).collect()
    }

    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut e = self.e;
        for i in 0..MAX_VARS {
            let s = e[i] as u16 + o.e[i] as u16;
            assert!(s < 256, "exponent overflow");
            e[i] = s as u8;
        }
        Mono { deg: self.deg + o.deg, e }
    }

    #[inline]
    pub fn divides(&self, o: &Mono) -> bool {
        self.deg <= o.deg && (0..MAX_VARS).all(|i| self.e[i] <= o.e[i])
    }

    /// o / self; caller guarantees divisibility.
    #[inline]
    pub fn quotient(&self, o: &Mono) -> Mono {
        let mut e = o.e;
        for i in 0..MAX_VARS {
            e[i] -= self.e[i];
        }
        Mono { deg: o.deg - self.deg, e }
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        let mut e = [0u8; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(o.e[i]);
            deg += e[i] as u16;
        }
        Mono { deg, e }
    }

    pub fn gcd(&self, o: &Mono) -> Mono {
        let mut e = [0u8; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].min(o.e[i]);
            deg += e[i] as u16;
        }
        Mono { deg, e }
    }

    pub fn is_coprime(&self, o: &Mono) -> bool {
        (0..MAX_VARS).all(|i| self.e[i] == 0 || o.e[i] == 0)
    }

    /// True if only variables with index < nvars occur.
    pub fn within(&self, nvars: usize) -> bool {
        self.e[nvars..].iter().all(|&x| x == 0)
    }
}

/// Monomial orders; variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonoOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonoOrder {
    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonoOrder::Grevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.e[i] != b.e[i] {
                        // smaller exponent in the last differing variable wins
                        return b.e[i].cmp(&a.e[i]);
                    }
                }
                Ordering::Equal
            }
            MonoOrder::Lex => {
                for i in 0..MAX_VARS {
                    if a.e[i] != b.e[i] {
                        return a.e[i].cmp(&b.e[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// All monomials of degree d in `nvars` variables, descending in grevlex.
pub fn monomials_of_degree(nvars: usize, d: i64) -> Vec<Mono> {
    if d < 0 {
        return vec![];
    }
    if nvars == 0 {
        return if d == 0 { vec![Mono::one()] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, d as u32, &mut out);
    out.sort_by(|a, b| MonoOrder::Grevlex.cmp(b, a));
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, rem: u32, out: &mut Vec<Mono>) {
    if i + 1 == cur.len() {
        cur[i] = rem;
        out.push(Mono::from_exponents(cur));
        return;
    }
    for k in (0..=rem).rev() {
        cur[i] = k;
        fill(cur, i + 1, rem - k, out);
    }
    cur[i] = 0;
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

/// Number of monomials of degree d in nvars variables.
pub fn count_monomials(nvars: usize, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    if nvars == 0 {
        return (d == 0) as i64;
    }
    binomial(d + nvars as i64 - 1, nvars as i64 - 1)
}
