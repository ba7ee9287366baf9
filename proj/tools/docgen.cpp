// Writes the built-in example documents in canonical form.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wfilt/documents.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "documents";
    std::filesystem::create_directories(dir);
    try {
        for (const auto& [name, doc] : wfilt::shipped_documents()) {
            std::ofstream out(dir + "/" + name, std::ios::binary);
            out << wfilt::dump_document(doc);
            std::cout << "wrote " << dir << "/" << name << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "docgen failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
