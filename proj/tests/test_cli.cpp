#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& data)
{
    std::ofstream(path, std::ios::binary) << data;
}

Result run(const std::string& args)
{
    const std::string cmd = std::string(HCT_CLI_PATH) + " " + args + " >cli_out.txt 2>cli_err.txt";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp("cli_out.txt"), slurp("cli_err.txt")};
}

const char* kPlain = "110010011101111110000011";
const char* kCipher = "0011010100011110100011101011000011100000";

} // namespace

TEST_CASE("encrypt and decrypt the worked example in text mode")
{
    auto r = run(std::string("encrypt --key 3,5 --text ") + kPlain + " --out example.hct");
    REQUIRE(r.status == 0);
    CHECK(r.out == std::string(kCipher) + "\n");
    CHECK(slurp("example.hct").size() == 50);

    r = run("decrypt --key 3,5 --in example.hct");
    REQUIRE(r.status == 0);
    CHECK(r.out == std::string(kPlain) + "\n");
}

TEST_CASE("matrix prints the mod-7 matrix")
{
    const auto r = run("matrix --exponent 3 --order 8");
    REQUIRE(r.status == 0);
    CHECK(r.out == "1 1 1 1 1 1 1 1\n"
                   "1 6 1 6 1 6 1 6\n"
                   "1 1 6 6 1 1 6 6\n"
                   "1 6 6 1 1 6 6 1\n"
                   "1 1 1 1 6 6 6 6\n"
                   "1 6 1 6 6 1 6 1\n"
                   "1 1 6 6 6 6 1 1\n"
                   "1 6 6 1 6 1 1 6\n");
}

TEST_CASE("file round trip is byte identical")
{
    std::mt19937 rng(5);
    for (std::size_t size : {0u, 1u, 3u, 17u, 1000u}) {
        std::string data(size, '\0');
        for (auto& c : data)
            c = static_cast<char>(rng());
        spit("plain.bin", data);
        REQUIRE(run("encrypt --key 5,3,7 --block-size 16 --in plain.bin --out plain.hct").status == 0);
        REQUIRE(run("decrypt --key 5,3,7 --in plain.hct --out plain.out").status == 0);
        CHECK(slurp("plain.out") == data);
    }
}

TEST_CASE("text mode and file mode agree")
{
    spit("three.bin", std::string("\xC9\xDF\x83", 3));
    REQUIRE(run("encrypt --key 3,5 --in three.bin --out three.hct").status == 0);
    REQUIRE(run(std::string("encrypt --key 3,5 --text ") + kPlain + " --out text.hct").status == 0);
    CHECK(slurp("three.hct") == slurp("text.hct"));
}

TEST_CASE("hash prints bits and hex")
{
    const auto r = run(std::string("hash --key 3,5 --digest-bits 16 --text ") + kPlain);
    REQUIRE(r.status == 0);
    CHECK(r.out == "0011010100011110\n351e\n");
}

TEST_CASE("analyze emits CSV")
{
    auto r = run(std::string("analyze --key 3,5 --text ") + kPlain);
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("position,bit_a,bit_b,diff\n0,1,0,1\n", 0) == 0);
    CHECK(r.out.find("# length_a=24 length_b=40 hamming=12 length_delta=16\n") != std::string::npos);

    r = run(std::string("analyze --key 3,5 --flip 0 --emit-csv flip.csv --text ") + kPlain);
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("# length_a=24 length_b=24", 0) == 0);
    const auto csv = slurp("flip.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);

    r = run("analyze --key 3 --text 111111");
    REQUIRE(r.status == 0);
    CHECK(r.err.find("hct: warning: input is all ones") == 0);
}

TEST_CASE("bench reports both kernels")
{
    const auto r = run("bench --exponent 31 --order 128 --iterations 100");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("order=128 exponent=31 modulus=2147483647 iterations=100 naive_ns=", 0) == 0);
}

TEST_CASE("error diagnostics and exit codes")
{
    auto r = run("encrypt --key 3,11 --text 1010");
    CHECK(r.status == 2);
    CHECK(r.err == "hct: error: InvalidKeyElement: parsing --key: key element 11: 2^x - 1 = 2047 is composite\n");

    r = run("encrypt --key 3 --block-size 12 --text 1010");
    CHECK(r.status == 5);
    CHECK(r.err == "hct: error: UnsupportedBlockOrder: encrypting: block order 12 is not one of 8, 16, 32, 64, 128\n");

    r = run("encrypt --key 3 --text 10a0");
    CHECK(r.status == 1);
    CHECK(r.err == "hct: error: InvalidArgument: parsing --text: bit string has invalid character at position 2\n");

    spit("garbage.hct", "NOPE");
    r = run("decrypt --key 3 --in garbage.hct");
    CHECK(r.status == 10);
    CHECK(r.err == "hct: error: MalformedEnvelope: parsing envelope: bad magic\n");

    REQUIRE(run(std::string("encrypt --key 3,5 --text ") + kPlain + " --out mismatch.hct").status == 0);
    r = run("decrypt --key 5,3 --in mismatch.hct");
    CHECK(r.status == 11);
    CHECK(r.err == "hct: error: KeyMismatch: decrypting: key element 0 does not match the envelope\n");

    r = run("decrypt --key 3 --in does-not-exist.hct");
    CHECK(r.status == 20);
    CHECK(r.err == "hct: error: IoError: cannot open 'does-not-exist.hct' for reading\n");

    r = run("encrypt --key 3");
    CHECK(r.status == 1);
    CHECK(r.err == "hct: error: InvalidArgument: one of --text or --in is required\n");

    r = run("frobnicate");
    CHECK(r.status != 0);
}

TEST_CASE("corrupted envelope surfaces a decoding diagnostic")
{
    REQUIRE(run("encrypt --key 3 --text 111111111111111111111111 --out ones.hct").status == 0);
    auto bytes = slurp("ones.hct");
    bytes[bytes.size() - 3] = '\x80'; // disturb the all-zero payload
    spit("ones_bad.hct", bytes);
    const auto r = run("decrypt --key 3 --in ones_bad.hct");
    CHECK(r.status == 6);
    CHECK(r.err.rfind("hct: error: SentinelConflict: decrypting: sentinel position", 0) == 0);
}
