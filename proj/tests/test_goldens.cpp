#include <doctest.h>

#include <fstream>
#include <set>

#include "branchcheck/goldens.hpp"

using namespace branchcheck;

#ifndef BRANCHCHECK_GOLDEN_DIR
#define BRANCHCHECK_GOLDEN_DIR "goldens"
#endif

TEST_SUITE("goldens") {
    const std::filesystem::path dir = BRANCHCHECK_GOLDEN_DIR;

    TEST_CASE("frozen canonical file matches the current rendering") {
        std::ifstream in(dir / "canonical.txt");
        std::string frozen((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(frozen == render_canonical());
    }

    TEST_CASE("every key has a transcription") {
        std::set<std::string> names;
        for (const auto& t : read_transcriptions(dir / "displays.txt")) names.insert(t.name);
        for (const auto& key : golden_keys()) {
            std::string name = key.substr(key.find('.') + 1);
            if (key.rfind("so.", 0) == 0) name = name.substr(name.find('.') + 1);
            CHECK_MESSAGE(names.count(name) == 1, key);
        }
    }

    TEST_CASE("all displays reproduce, P_3 reported") {
        Records r = verify_goldens(dir);
        CHECK(r.size() == golden_keys().size());
        for (const auto& x : r) {
            if (x.check_id == "golden.diag.P3")
                CHECK(x.status == Status::discrepancy_reported);
            else
                CHECK_MESSAGE(x.status == Status::pass, x.check_id << " " << x.witness);
        }
    }

    TEST_CASE("a corrupted golden fails") {
        auto tmp = std::filesystem::temp_directory_path() / "branchcheck_golden_unit";
        std::filesystem::create_directories(tmp);
        std::filesystem::copy_file(dir / "displays.txt", tmp / "displays.txt", std::filesystem::copy_options::overwrite_existing);
        std::string text = render_canonical();
        text.replace(text.find("ortho.C1 = "), std::string("ortho.C1 = (2*a)*x").size(), "ortho.C1 = (3*a)*x");
        std::ofstream(tmp / "canonical.txt") << text;
        Records r = verify_goldens(tmp);
        CHECK(any_failed(r));
        std::filesystem::remove_all(tmp);
    }
}
