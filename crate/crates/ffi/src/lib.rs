//! C ABI for `cnext`.
//!
//! Every fallible call returns a [`CnextStatus`]; on failure a message is
//! available from [`cnext_last_error`] on the same thread. Objects are
//! opaque handles created by `*_new` functions and released by the matching
//! `*_free`. User functions are passed as a callback plus a `user_data`
//! pointer that is handed back on every call.

#![allow(clippy::missing_safety_doc)]

use cnext::diagnostics::build_g_profile;
use cnext::extend2d::Region;
use cnext::{Error, ExtensionScheme};
use std::cell::RefCell;
use std::ffi::{c_char, c_void, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CnextStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DegenerateNodes = 3,
    NodesNotIncreasing = 4,
    IllConditioned = 5,
    Domain = 6,
    ReachExceeded = 7,
    UndefinedRatio = 8,
    NotResolvable = 9,
    ToleranceTooSmall = 10,
    DegenerateParametrization = 11,
    SampleOutsideDomain = 12,
    EmptyInput = 13,
    BufferTooSmall = 14,
    Panic = 15,
}

/// Where a 2D query point fell.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CnextRegion {
    Inside = 0,
    Tube = 1,
    Outside = 2,
}

/// `f(user_data, x)`.
pub type CnextFn1 = Option<unsafe extern "C" fn(user_data: *mut c_void, x: f64) -> f64>;
/// `f(user_data, x, y)`.
pub type CnextFn2 = Option<unsafe extern "C" fn(user_data: *mut c_void, x: f64, y: f64) -> f64>;

/// Extension weights and nodes.
pub struct CnextScheme {
    inner: ExtensionScheme,
}

/// Shrinking map, optionally tabulated.
pub struct CnextShrinkMap {
    inner: cnext::ShrinkMap,
}

/// 1D extension setup.
pub struct CnextExtension1D {
    inner: cnext::Extension1DConfig,
}

/// Extension across a closed curve.
pub struct CnextExtension2D {
    inner: cnext::Extension2D,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CnextStatus {
    match e {
        Error::DegenerateNodes => CnextStatus::DegenerateNodes,
        Error::NodesNotIncreasing => CnextStatus::NodesNotIncreasing,
        Error::IllConditioned => CnextStatus::IllConditioned,
        Error::Domain { .. } => CnextStatus::Domain,
        Error::InvalidArgument(_) => CnextStatus::InvalidArgument,
        Error::ReachExceeded { .. } => CnextStatus::ReachExceeded,
        Error::UndefinedRatio => CnextStatus::UndefinedRatio,
        Error::NotResolvable { .. } => CnextStatus::NotResolvable,
        Error::ToleranceTooSmall => CnextStatus::ToleranceTooSmall,
        Error::DegenerateParametrization { .. } => CnextStatus::DegenerateParametrization,
        Error::SampleOutsideDomain { .. } => CnextStatus::SampleOutsideDomain,
        Error::EmptyInput => CnextStatus::EmptyInput,
    }
}

struct Fail(CnextStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(CnextStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CnextStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            CnextStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            CnextStatus::Panic
        }
    }
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

unsafe fn drop_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

fn callback1(f: CnextFn1, user_data: *mut c_void) -> Result<impl Fn(f64) -> f64, Fail> {
    let f = f.ok_or_else(|| null("callback"))?;
    Ok(move |x: f64| unsafe { f(user_data, x) })
}

/// Message for the most recent failed call on this thread; empty after a
/// successful call. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cnext_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `T_n(1 + 2/a)`, the l1 norm of the optimal weights.
#[no_mangle]
pub unsafe extern "C" fn cnext_condition_number(n: usize, a: f64, out: *mut f64) -> CnextStatus {
    guard(|| {
        *out_ref(out, "out")? = cnext::scheme::condition_number(n, a)?;
        Ok(())
    })
}

/// Optimal scheme of order `n` with nodes on `[0, a]`.
#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_new_optimal(n: usize, a: f64, out: *mut *mut CnextScheme) -> CnextStatus {
    guard(|| {
        let o = out_ref(out, "out")?;
        *o = boxed(CnextScheme {
            inner: ExtensionScheme::optimal(n, a)?,
        });
        Ok(())
    })
}

/// Scheme on caller-supplied increasing nodes in `[0, a]`.
#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_new_with_nodes(
    a: f64,
    nodes: *const f64,
    len: usize,
    out: *mut *mut CnextScheme,
) -> CnextStatus {
    guard(|| {
        let o = out_ref(out, "out")?;
        if nodes.is_null() {
            return Err(null("nodes"));
        }
        let t = std::slice::from_raw_parts(nodes, len);
        *o = boxed(CnextScheme {
            inner: ExtensionScheme::with_nodes(a, t)?,
        });
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_free(s: *mut CnextScheme) {
    drop_handle(s)
}

/// Order `n`; the scheme has `n + 1` nodes. Returns 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_order(s: *const CnextScheme) -> usize {
    s.as_ref().map_or(0, |s| s.inner.order())
}

/// l1 norm of the weights. NaN for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_cond(s: *const CnextScheme) -> f64 {
    s.as_ref().map_or(f64::NAN, |s| s.inner.cond())
}

unsafe fn copy_out(src: &[f64], dst: *mut f64, len: usize) -> Result<(), Fail> {
    if dst.is_null() {
        return Err(null("buffer"));
    }
    if len < src.len() {
        return Err(Fail(
            CnextStatus::BufferTooSmall,
            format!("buffer holds {len} values, need {}", src.len()),
        ));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
    Ok(())
}

/// Copies the `order + 1` nodes into `dst`.
#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_nodes(s: *const CnextScheme, dst: *mut f64, len: usize) -> CnextStatus {
    guard(|| copy_out(handle(s, "scheme")?.inner.nodes(), dst, len))
}

/// Copies the `order + 1` weights into `dst`.
#[no_mangle]
pub unsafe extern "C" fn cnext_scheme_weights(s: *const CnextScheme, dst: *mut f64, len: usize) -> CnextStatus {
    guard(|| copy_out(handle(s, "scheme")?.inner.weights(), dst, len))
}

/// Shrinking map `psi` with parameter `delta` and order `n`. A positive
/// `tol` builds a piecewise-Chebyshev table accurate to `tol`; otherwise
/// every evaluation runs the root finder.
#[no_mangle]
pub unsafe extern "C" fn cnext_shrink_new(
    delta: f64,
    n: usize,
    tol: f64,
    out: *mut *mut CnextShrinkMap,
) -> CnextStatus {
    guard(|| {
        let o = out_ref(out, "out")?;
        let inner = if tol > 0.0 {
            cnext::build_shrink_table(delta, n, tol)?
        } else {
            cnext::ShrinkMap::new(delta, n)?
        };
        *o = boxed(CnextShrinkMap { inner });
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cnext_shrink_free(m: *mut CnextShrinkMap) {
    drop_handle(m)
}

/// `psi(x)` for `x` in `[0, 1]`.
#[no_mangle]
pub unsafe extern "C" fn cnext_shrink_psi(m: *const CnextShrinkMap, x: f64, out: *mut f64) -> CnextStatus {
    guard(|| {
        let m = handle(m, "shrink map")?;
        *out_ref(out, "out")? = m.inner.psi(x)?;
        Ok(())
    })
}

/// Benchmark setup: source `[0, 0.5]`, extension `[-0.25, 0]` with the
/// standard windows. `shrink_delta <= 0` means no shrinking map.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext1d_new_benchmark(
    n: usize,
    a: f64,
    shrink_delta: f64,
    out: *mut *mut CnextExtension1D,
) -> CnextStatus {
    guard(|| {
        let o = out_ref(out, "out")?;
        let delta = (shrink_delta > 0.0).then_some(shrink_delta);
        *o = boxed(CnextExtension1D {
            inner: cnext::Extension1DConfig::benchmark(n, a, delta)?,
        });
        Ok(())
    })
}

/// Windowless extension from `[0, source_len]` to `[-extension_len, 0]`.
/// The scheme is copied; the caller keeps ownership of `scheme`.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext1d_new(
    scheme: *const CnextScheme,
    source_len: f64,
    extension_len: f64,
    out: *mut *mut CnextExtension1D,
) -> CnextStatus {
    guard(|| {
        let s = handle(scheme, "scheme")?;
        let o = out_ref(out, "out")?;
        *o = boxed(CnextExtension1D {
            inner: cnext::Extension1DConfig::new(s.inner.clone(), source_len, extension_len)?,
        });
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cnext_ext1d_free(e: *mut CnextExtension1D) {
    drop_handle(e)
}

/// Extended value at `x` in `[-extension_len, 0]`.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext1d_eval(
    e: *const CnextExtension1D,
    f: CnextFn1,
    user_data: *mut c_void,
    x: f64,
    out: *mut f64,
) -> CnextStatus {
    guard(|| {
        let e = handle(e, "extension")?;
        let g = callback1(f, user_data)?;
        *out_ref(out, "out")? = cnext::extend_point(&g, &e.inner, x)?;
        Ok(())
    })
}

/// `max |E f| / max |f|` over uniform probes (at least 1000).
#[no_mangle]
pub unsafe extern "C" fn cnext_ext1d_kappa(
    e: *const CnextExtension1D,
    f: CnextFn1,
    user_data: *mut c_void,
    probes: usize,
    out: *mut f64,
) -> CnextStatus {
    guard(|| {
        let e = handle(e, "extension")?;
        let g = callback1(f, user_data)?;
        *out_ref(out, "out")? = cnext::kappa(&g, &e.inner, probes)?;
        Ok(())
    })
}

/// Number of adaptive Chebyshev panels of the extended profile on
/// `[-extension_len, source_len]`, with `k` coefficients per panel and tail
/// tolerance `tol` relative to the profile's maximum.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext1d_chunks(
    e: *const CnextExtension1D,
    f: CnextFn1,
    user_data: *mut c_void,
    k: usize,
    tol: f64,
    out: *mut usize,
) -> CnextStatus {
    guard(|| {
        let e = handle(e, "extension")?;
        let g = callback1(f, user_data)?;
        *out_ref(out, "out")? = build_g_profile(&g, &e.inner).chunks_with(k, tol)?.len();
        Ok(())
    })
}

unsafe fn new_ext2d(
    curve: cnext::Result<cnext::ParametricCurve>,
    n: usize,
    a: f64,
    reach: f64,
    out: *mut *mut CnextExtension2D,
) -> CnextStatus {
    guard(|| {
        let o = out_ref(out, "out")?;
        let curve = curve?;
        let scheme = ExtensionScheme::optimal(n, a)?;
        let inner = if reach > 0.0 {
            cnext::Extension2D::new(curve, scheme, reach, None)?
        } else {
            cnext::Extension2D::with_default_reach(curve, scheme, None)?
        };
        *o = boxed(CnextExtension2D { inner });
        Ok(())
    })
}

/// Extension across a circle. `reach <= 0` selects `0.5 / max curvature`.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_new_circle(
    cx: f64,
    cy: f64,
    radius: f64,
    n: usize,
    a: f64,
    reach: f64,
    out: *mut *mut CnextExtension2D,
) -> CnextStatus {
    let c = cnext::Point2::new(cx, cy);
    new_ext2d(cnext::ParametricCurve::circle(c, radius), n, a, reach, out)
}

/// Extension across an axis-aligned ellipse.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_new_ellipse(
    cx: f64,
    cy: f64,
    semi_x: f64,
    semi_y: f64,
    n: usize,
    a: f64,
    reach: f64,
    out: *mut *mut CnextExtension2D,
) -> CnextStatus {
    let c = cnext::Point2::new(cx, cy);
    new_ext2d(cnext::ParametricCurve::ellipse(c, semi_x, semi_y), n, a, reach, out)
}

/// Extension across the star `r = radius (1 + amplitude cos(lobes theta))`.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_new_star(
    cx: f64,
    cy: f64,
    radius: f64,
    amplitude: f64,
    lobes: u32,
    n: usize,
    a: f64,
    reach: f64,
    out: *mut *mut CnextExtension2D,
) -> CnextStatus {
    let c = cnext::Point2::new(cx, cy);
    new_ext2d(cnext::ParametricCurve::star(c, radius, amplitude, lobes), n, a, reach, out)
}

/// Extension across the trigonometric interpolant of `len` boundary points
/// (`xs[i]`, `ys[i]`), uniformly spaced in parameter; `len` must be a power
/// of two and at least 8.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_new_samples(
    xs: *const f64,
    ys: *const f64,
    len: usize,
    n: usize,
    a: f64,
    reach: f64,
    out: *mut *mut CnextExtension2D,
) -> CnextStatus {
    if xs.is_null() || ys.is_null() {
        return guard(|| Err(null("sample arrays")));
    }
    let xs = std::slice::from_raw_parts(xs, len);
    let ys = std::slice::from_raw_parts(ys, len);
    let pts: Vec<cnext::Point2> = xs.iter().zip(ys).map(|(&x, &y)| cnext::Point2::new(x, y)).collect();
    new_ext2d(cnext::ParametricCurve::from_samples(&pts), n, a, reach, out)
}

#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_free(e: *mut CnextExtension2D) {
    drop_handle(e)
}

/// Tube half-width. NaN for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_reach(e: *const CnextExtension2D) -> f64 {
    e.as_ref().map_or(f64::NAN, |e| e.inner.reach())
}

/// Extended field at `(x, y)`: `f` inside the curve, the normal extension in
/// the tube, zero beyond it. `region` may be null.
#[no_mangle]
pub unsafe extern "C" fn cnext_ext2d_eval(
    e: *const CnextExtension2D,
    f: CnextFn2,
    user_data: *mut c_void,
    x: f64,
    y: f64,
    out: *mut f64,
    region: *mut CnextRegion,
) -> CnextStatus {
    guard(|| {
        let e = handle(e, "extension")?;
        let f = f.ok_or_else(|| null("callback"))?;
        let g = move |p: cnext::Point2| unsafe { f(user_data, p.x, p.y) };
        let o = out_ref(out, "out")?;
        let (v, r) = e.inner.value_at(&g, cnext::Point2::new(x, y))?;
        *o = v;
        if let Some(rr) = region.as_mut() {
            *rr = match r {
                Region::Inside => CnextRegion::Inside,
                Region::Tube => CnextRegion::Tube,
                Region::Outside => CnextRegion::Outside,
            };
        }
        Ok(())
    })
}
