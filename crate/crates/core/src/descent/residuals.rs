//! The defining equations of each certificate, recomputed from `d` and the witnesses.

use super::certificate::{Method, Residual, Witnesses};
use crate::error::Result;
use crate::scalar::PellInt;

pub(crate) fn compute<T: PellInt>(method: Method, d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    match method {
        Method::EulerNeg1 => euler(d, w, 1, -1),
        Method::EulerNeg2 => euler(d, w, 2, -2),
        Method::EulerPos2 => euler(d, w, -2, 2),
        Method::EulerNeg4 => euler_neg4(d, w),
        Method::Hart => hart(d, w),
        Method::Gunther if w.get("z").is_some() => gunther(d, w),
        Method::Gunther => hart(d, w),
        Method::Sylvester => sylvester(d, w),
        Method::GerardinA | Method::GerardinB | Method::GerardinC => gerardin(method, d, w),
        Method::HardyWilliams => hardy_williams(d, w),
        Method::Bapoungue => bapoungue(d, w),
        Method::Arteha1Mod4 | Method::Arteha3Mod8 | Method::Arteha7Mod8 => arteha(method, d, w),
    }
}

fn lit<T: PellInt>(v: i64) -> T {
    T::lit(v)
}

fn parity<T: PellInt>(label: &str, v: &T) -> Residual<T> {
    Residual::equals(label, v.mod_floor(&lit(2)), T::one())
}

/// `d = f² + k·g²`, `p² = b² + k·c²`, `bg − cf = ±1`, `q = bf + k·cg`, `q² − d·p² = n`.
fn euler<T: PellInt>(d: &T, w: &Witnesses<T>, k: i64, n: i64) -> Result<Vec<Residual<T>>> {
    let (f, g, b, c, p, q) = (w.need("f")?, w.need("g")?, w.need("b")?, w.need("c")?, w.need("p")?, w.need("q")?);
    let kk: T = lit(k);
    let (rep, tri, lin) = match k {
        1 => ("f² + g²", "b² + c²", "bf + cg"),
        2 => ("f² + 2g²", "b² + 2c²", "bf + 2cg"),
        _ => ("f² − 2g²", "b² − 2c²", "bf − 2cg"),
    };
    Ok(vec![
        Residual::equals(rep, f.sq() + kk.clone() * g.sq(), d.clone()),
        Residual::equals(tri, b.sq() + kk.clone() * c.sq(), p.sq()),
        Residual::plus_minus("bg − cf", b.clone() * g.clone() - c.clone() * f.clone(), T::one()),
        Residual::equals(lin, b.clone() * f.clone() + kk * c.clone() * g.clone(), q.clone()),
        Residual::equals("q² − d·p²", q.sq() - d.clone() * p.sq(), lit(n)),
    ])
}

fn euler_neg4<T: PellInt>(d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (f, g, b, c, r, s) = (w.need("f")?, w.need("g")?, w.need("b")?, w.need("c")?, w.need("r")?, w.need("s")?);
    let mut out = vec![
        Residual::equals("f² + g²", f.sq() + g.sq(), d.clone()),
        Residual::equals("b² + c²", b.sq() + c.sq(), r.sq()),
        Residual::plus_minus("bg − cf", b.clone() * g.clone() - c.clone() * f.clone(), lit(2)),
        Residual::equals("bf + cg", b.clone() * f.clone() + c.clone() * g.clone(), s.clone()),
        Residual::equals("s² − d·r²", s.sq() - d.clone() * r.sq(), lit(-4)),
    ];
    if let (Some(p), Some(q)) = (w.get("p"), w.get("q")) {
        out.push(Residual::equals("rs", r.clone() * s.clone(), p.clone()));
        out.push(Residual::equals("s² + 2", s.sq() + lit(2), q.clone()));
        out.push(Residual::equals("q² − d·p²", q.sq() - d.clone() * p.sq(), lit(4)));
    }
    Ok(out)
}

fn hart<T: PellInt>(d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (r, s, m, n, x, y) = (w.need("r")?, w.need("s")?, w.need("m")?, w.need("n")?, w.need("x")?, w.need("y")?);
    let two: T = lit(2);
    Ok(vec![
        Residual::equals("r² + s²", r.sq() + s.sq(), d.clone()),
        Residual::plus_minus(
            "sm² − 2rmn − sn²",
            s.clone() * m.sq() - two * r.clone() * m.clone() * n.clone() - s.clone() * n.sq(),
            T::one(),
        ),
        Residual::equals("m² + n²", m.sq() + n.sq(), y.clone()),
        Residual::equals("x² − d·y²", x.sq() - d.clone() * y.sq(), lit(-1)),
    ])
}

fn gunther<T: PellInt>(d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (p, q, z, x, y) = (w.need("p")?, w.need("q")?, w.need("z")?, w.need("x")?, w.need("y")?);
    let two: T = lit(2);
    let root = (p.clone() + q.clone()).abs();
    let four_q2 = lit::<T>(4) * q.sq();
    // z = ±1, so dividing by z is multiplying by z
    let x_formula = ((four_q2.clone() + z.clone() - two.clone() * q.clone() * root.clone()) * z.clone()).abs();
    let y_formula = ((-four_q2 - z.clone() + lit::<T>(4) * q.clone() * root.clone()) * z.clone()).abs();
    Ok(vec![
        Residual::equals("d", d.clone(), two.clone()),
        Residual::equals("p² + 2pq − q²", p.sq() + two.clone() * p.clone() * q.clone() - q.sq(), z.clone()),
        Residual::plus_minus("z", z.clone(), T::one()),
        Residual::equals("2q² + z", two.clone() * q.sq() + z.clone(), root.sq()),
        Residual::equals("|(4q² + z − 2q√(2q² + z))/z|", x_formula, x.clone()),
        Residual::equals("|(−4q² − z + 4q√(2q² + z))/z|", y_formula, y.clone()),
        Residual::equals("2x² − y²", two * x.sq() - y.sq(), T::one()),
    ])
}

fn sylvester<T: PellInt>(d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (f, g, x, y, p, q) = (w.need("f")?, w.need("g")?, w.need("x")?, w.need("y")?, w.need("p")?, w.need("q")?);
    let two: T = lit(2);
    let y2_minus = y.sq() - two.clone() * x.sq();
    Ok(vec![
        Residual::equals("2f² + g²", two.clone() * f.sq() + g.sq(), d.clone()),
        parity("f mod 2", f),
        Residual::plus_minus(
            "fy² + 2gxy − 2fx²",
            f.clone() * y.sq() + two.clone() * g.clone() * x.clone() * y.clone() - two.clone() * f.clone() * x.sq(),
            T::one(),
        ),
        Residual::equals(
            "g(y² − 2x²) − 4fxy",
            g.clone() * y2_minus - lit::<T>(4) * f.clone() * x.clone() * y.clone(),
            p.clone(),
        ),
        Residual::equals("y² + 2x²", y.sq() + two * x.sq(), q.clone()),
        Residual::equals("p² − d·q²", p.sq() - d.clone() * q.sq(), lit(-2)),
    ])
}

fn gerardin<T: PellInt>(method: Method, d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (m, n, al, be, z, t) = (w.need("m")?, w.need("n")?, w.need("alpha")?, w.need("beta")?, w.need("z")?, w.need("t")?);
    let (m, n, al, be) = (m.clone(), n.clone(), al.clone(), be.clone());
    let two: T = lit(2);
    let ab = al.clone() * be.clone();
    Ok(match method {
        Method::GerardinA => vec![
            Residual::equals("m² + n²", m.sq() + n.sq(), d.clone()),
            Residual::plus_minus(
                "mα² + 2nαβ − mβ²",
                m.clone() * al.sq() + two.clone() * n.clone() * ab.clone() - m.clone() * be.sq(),
                T::one(),
            ),
            Residual::equals(
                "nα² − 2mαβ − nβ²",
                n.clone() * al.sq() - two * m.clone() * ab - n.clone() * be.sq(),
                z.clone(),
            ),
            Residual::equals("α² + β²", al.sq() + be.sq(), t.clone()),
            Residual::plus_minus(
                "(mα + nβ)² − d·β²",
                (m.clone() * al.clone() + n.clone() * be.clone()).sq() - d.clone() * be.sq(),
                m.clone(),
            ),
            Residual::plus_minus(
                "(nα − mβ)² − d·α²",
                (n * al.clone() - m.clone() * be).sq() - d.clone() * al.sq(),
                m,
            ),
            Residual::equals("z² − d·t²", z.sq() - d.clone() * t.sq(), lit(-1)),
        ],
        Method::GerardinB => vec![
            Residual::equals("m² − 2n²", m.sq() - two.clone() * n.sq(), d.clone()),
            Residual::plus_minus(
                "nα² − 2mαβ + 2nβ²",
                n.clone() * al.sq() - two.clone() * m.clone() * ab.clone() + two.clone() * n.clone() * be.sq(),
                T::one(),
            ),
            Residual::equals(
                "mα² − 4nαβ + 2mβ²",
                m.clone() * al.sq() - lit::<T>(4) * n.clone() * ab + two.clone() * m.clone() * be.sq(),
                z.clone(),
            ),
            Residual::equals("α² − 2β²", al.sq() - two.clone() * be.sq(), t.clone()),
            Residual::plus_minus(
                "(nα − mβ)² − d·β²",
                (n.clone() * al.clone() - m.clone() * be.clone()).sq() - d.clone() * be.sq(),
                n.clone(),
            ),
            Residual::plus_minus(
                "(2nβ − mα)² − d·α²",
                (two.clone() * n.clone() * be - m * al.clone()).sq() - d.clone() * al.sq(),
                two.clone() * n,
            ),
            Residual::equals("z² − d·t²", z.sq() - d.clone() * t.sq(), two),
        ],
        _ => vec![
            Residual::equals("m² + n²", m.sq() + n.sq(), d.clone()),
            Residual::plus_minus(
                "nα² − 2mαβ − nβ²",
                n.clone() * al.sq() - two.clone() * m.clone() * ab.clone() - n.clone() * be.sq(),
                two.clone(),
            ),
            Residual::equals(
                "mα² + 2nαβ − mβ²",
                m.clone() * al.sq() + two.clone() * n.clone() * ab - m.clone() * be.sq(),
                z.clone(),
            ),
            Residual::equals("α² + β²", al.sq() + be.sq(), t.clone()),
            Residual::plus_minus(
                "(nα − mβ)² − d·β²",
                (n.clone() * al.clone() - m.clone() * be.clone()).sq() - d.clone() * be.sq(),
                two.clone() * n.clone(),
            ),
            Residual::plus_minus(
                "(nβ + mα)² − d·α²",
                (n.clone() * be + m * al.clone()).sq() - d.clone() * al.sq(),
                two * n,
            ),
            Residual::equals("z² − d·t²", z.sq() - d.clone() * t.sq(), lit(-4)),
        ],
    })
}

fn hardy_williams<T: PellInt>(d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (f, g, x, y) = (w.need("f")?, w.need("g")?, w.need("x")?, w.need("y")?);
    let (b, c, p, q) = (w.need("b")?, w.need("c")?, w.need("p")?, w.need("q")?);
    let two: T = lit(2);
    Ok(vec![
        Residual::equals("f² + g²", f.sq() + g.sq(), d.clone()),
        parity("f mod 2", f),
        Residual::equals(
            "fx² − 2gxy − fy²",
            f.clone() * x.sq() - two.clone() * g.clone() * x.clone() * y.clone() - f.clone() * y.sq(),
            T::one(),
        ),
        Residual::equals("2xy", two * x.clone() * y.clone(), b.clone()),
        Residual::equals("x² − y²", x.sq() - y.sq(), c.clone()),
        Residual::equals("x² + y²", x.sq() + y.sq(), p.clone()),
        Residual::equals("bf + cg", b.clone() * f.clone() + c.clone() * g.clone(), q.clone()),
        Residual::equals("q² − d·p²", q.sq() - d.clone() * p.sq(), lit(-1)),
    ])
}

fn bapoungue<T: PellInt>(d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (k, a, b, x, y) = (w.need("k")?, w.need("a")?, w.need("b2")?, w.need("x")?, w.need("y")?);
    let (z, t, delta) = (w.need("z")?, w.need("t")?, w.need("delta")?);
    let two: T = lit(2);
    let ka = k.clone() * a.clone();
    Ok(vec![
        Residual::equals("δ", delta.clone(), d.clone()),
        Residual::equals("ka² + b²", ka.clone() * a.clone() + b.sq(), delta.clone()),
        Residual::plus_minus(
            "ax² + 2bxy − kay²",
            a.clone() * x.sq() + two.clone() * b.clone() * x.clone() * y.clone() - ka.clone() * y.sq(),
            T::one(),
        ),
        Residual::equals(
            "−bx² + 2akxy + kby²",
            -b.clone() * x.sq() + two * ka.clone() * x.clone() * y.clone() + k.clone() * b.clone() * y.sq(),
            z.clone(),
        ),
        Residual::equals("x² + ky²", x.sq() + k.clone() * y.sq(), t.clone()),
        Residual::equals("z² − δ·t²", z.sq() - delta.clone() * t.sq(), -k.clone()),
        Residual::plus_minus(
            "(ax + by)² − δ·y²",
            (a.clone() * x.clone() + b.clone() * y.clone()).sq() - delta.clone() * y.sq(),
            a.clone(),
        ),
        Residual::plus_minus(
            "(kay − bx)² − δ·x²",
            (ka.clone() * y.clone() - b.clone() * x.clone()).sq() - delta.clone() * x.sq(),
            ka,
        ),
    ])
}

fn arteha<T: PellInt>(method: Method, d: &T, w: &Witnesses<T>) -> Result<Vec<Residual<T>>> {
    let (a, b, m, n, x, y) = (w.need("a")?, w.need("b")?, w.need("m")?, w.need("n")?, w.need("x")?, w.need("y")?);
    let (a, b, m, n) = (a.clone(), b.clone(), m.clone(), n.clone());
    let (two, four): (T, T) = (lit(2), lit(4));
    let mn = m.clone() * n.clone();
    let mut out = match method {
        Method::Arteha1Mod4 => {
            let diff = m.sq() - n.sq();
            vec![
                Residual::equals("a² + b²", a.sq() + b.sq(), d.clone()),
                parity("a mod 2", &a),
                Residual::plus_minus("a(m² − n²) − 2bmn", a.clone() * diff.clone() - two.clone() * b.clone() * mn.clone(), T::one()),
                Residual::equals(
                    "2·|2amn + b(m² − n²)|·(m² + n²)",
                    two.clone() * (two * a * mn + b * diff).abs() * (m.sq() + n.sq()),
                    y.clone(),
                ),
            ]
        }
        Method::Arteha3Mod8 => {
            let diff = (m.sq() - two.clone() * n.sq()).abs();
            vec![
                Residual::equals("a² + 2b²", a.sq() + two.clone() * b.sq(), d.clone()),
                Residual::plus_minus("b·|m² − 2n²| − 2amn", b.clone() * diff.clone() - two.clone() * a.clone() * mn.clone(), T::one()),
                Residual::equals(
                    "|4bmn + a·|m² − 2n²||·(m² + 2n²)",
                    (four * b * mn + a * diff).abs() * (m.sq() + two * n.sq()),
                    y.clone(),
                ),
            ]
        }
        _ => {
            let sum = m.sq() + two.clone() * n.sq();
            vec![
                Residual::equals("a² − 2b²", a.sq() - two.clone() * b.sq(), d.clone()),
                Residual::plus_minus("2amn − b(m² + 2n²)", two.clone() * a.clone() * mn.clone() - b.clone() * sum.clone(), T::one()),
                Residual::equals(
                    "|(a(m² + 2n²) − 4bmn)(m² − 2n²)|",
                    ((a * sum - four * b * mn) * (m.sq() - two * n.sq())).abs(),
                    y.clone(),
                ),
            ]
        }
    };
    out.push(Residual::equals("x² − d·y²", x.sq() - d.clone() * y.sq(), T::one()));
    Ok(out)
}
