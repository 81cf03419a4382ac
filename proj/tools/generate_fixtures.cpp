#include <iostream>

#include "CLI11.hpp"
#include "haantjes/fixtures.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Regenerate the fixture tree"};
    std::string root = HAANTJES_FIXTURE_DIR;
    app.add_option("--out", root, "fixture directory");
    CLI11_PARSE(app, argc, argv);
    try {
        haantjes::write_fixtures(root);
        std::cout << "wrote " << haantjes::generate_fixtures().size() << " fixtures to " << root << '\n';
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }
    return 0;
}
