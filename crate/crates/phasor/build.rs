fn main() {
    // BLAS/LAPACK symbols (zgees, zgeev, ztrsyl, zheevd, zgemm, ...) come from
    // the system OpenBLAS, which bundles a full LAPACK.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
