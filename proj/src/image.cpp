#include "vdd/image.hpp"

#include <cctype>
#include <fstream>
#include <string>

#include "vdd/error.hpp"

namespace vdd::io {

namespace {

// Reads one whitespace-delimited PGM header token, skipping '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

int parse_int(const std::string& tok, const std::string& what, const std::string& path) {
    if (tok.empty()) raise(Errc::ParseError, path + ": missing " + what);
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            raise(Errc::ParseError, path + ": bad " + what + " '" + tok + "'");
    }
    return std::stoi(tok);
}

} // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open " + path);

    std::string magic = next_token(in);
    if (magic != "P5") raise(Errc::ParseError, path + ": not a binary PGM (magic '" + magic + "')");
    int width = parse_int(next_token(in), "width", path);
    int height = parse_int(next_token(in), "height", path);
    int maxval = parse_int(next_token(in), "maxval", path);
    if (width <= 0 || height <= 0) raise(Errc::ParseError, path + ": bad dimensions");
    if (maxval <= 0 || maxval > 255) raise(Errc::ParseError, path + ": unsupported maxval");

    GrayImage img(width, height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        raise(Errc::ParseError, path + ": truncated pixel data");
    return img;
}

void write_pgm(const GrayImage& image, const std::string& path) {
    require(image.width > 0 && image.height > 0 &&
                image.pixels.size() == static_cast<std::size_t>(image.width) * image.height,
            Errc::InvalidArgument, "write_pgm: malformed image");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::IoError, "cannot write " + path);
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    if (!out) raise(Errc::IoError, "short write to " + path);
}

} // namespace vdd::io
