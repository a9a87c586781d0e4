fn main() {
    let (c, d) = framecode::moonshine::build_moonshine_codes();
    std::fs::write(
        "data/moonshine_c.code",
        framecode::gf2::format_code_file(&c, Some("length-48 moonshine frame: C = D^perp, dim 41")),
    )
    .unwrap();
    std::fs::write(
        "data/moonshine_d.code",
        framecode::gf2::format_code_file(
            &d,
            Some("length-48 moonshine frame: D spanned by the two block words and (a,a,a), a in RM(1,4)"),
        ),
    )
    .unwrap();
}
