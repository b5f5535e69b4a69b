// Regenerates the JSON fixtures under fixtures/. The committed files are
// produced by this tool; tests assert that they stay in sync with the
// programmatic constructions.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "helpers.hpp"
#include "levi/json_io.hpp"

using namespace levi;
using namespace levi::testing;

namespace {

void write(const std::filesystem::path& path, const Json& j) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";

    write(root / "monoids/sl2.json", monoid_to_json(*Monoid::meet_semilattice(2)));
    write(root / "monoids/sl3.json", monoid_to_json(*Monoid::meet_semilattice(3)));
    write(root / "monoids/s3.json", monoid_to_json(*Monoid::symmetric3()));
    write(root / "monoids/na24.json",
          monoid_to_json(*Monoid::from_catalog("direct_product(meet_semilattice(2),symmetric3)")));
    write(root / "monoids/cyclic5.json", monoid_to_json(*Monoid::cyclic(5)));

    write(root / "specs/spec_sl2_gf2.json", spec_to_json(sl2_spec(Field::gf(2))));
    write(root / "specs/spec_sl2_gf3.json", spec_to_json(sl2_spec(Field::gf(3))));
    write(root / "specs/spec_sl2_gf5.json", spec_to_json(sl2_spec(Field::gf(5))));
    write(root / "specs/spec_sl2_rat.json", spec_to_json(sl2_spec(Field::rationals())));

    write(root / "specs/spec_sl3_gf2_p22.json",
          spec_to_json(sl3_spec(Field::gf(2), {{1, 2}, {3, 4}})));
    write(root / "specs/spec_sl3_gf2_p32.json",
          spec_to_json(sl3_spec(Field::gf(2), {{1, 3}, {4, 5}})));

    const Field g3 = Field::gf(3);
    auto b4 = std::vector<Scalar>{Scalar::of_int(g3, 1), Scalar::of_int(g3, 2),
                                  Scalar::of_int(g3, 1), Scalar::of_int(g3, 2)};
    auto b5a = std::vector<Scalar>{Scalar::of_int(g3, 1), Scalar::of_int(g3, 2),
                                   Scalar::of_int(g3, 1), Scalar::of_int(g3, 2),
                                   Scalar::of_int(g3, 1)};
    auto b5b = std::vector<Scalar>{Scalar::of_int(g3, 2), Scalar::of_int(g3, 1),
                                   Scalar::of_int(g3, 1), Scalar::of_int(g3, 2),
                                   Scalar::of_int(g3, 1)};
    write(root / "specs/spec_sl3_gf3_p22.json",
          spec_to_json(sl3_spec(g3, {{1, 2}, {3, 4}}, b4)));
    write(root / "specs/spec_sl3_gf3_p32.json",
          spec_to_json(sl3_spec(g3, {{1, 3}, {4, 5}}, b5a)));
    write(root / "specs/spec_sl3_gf3_p23.json",
          spec_to_json(sl3_spec(g3, {{1, 2}, {3, 5}}, b5b)));

    write(root / "specs/spec_na24_gf3.json", spec_to_json(na24_spec()));
    return 0;
}
