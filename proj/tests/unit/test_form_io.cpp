#include "binform/errors.hpp"
#include "binform/form_io.hpp"
#include "binform/forms.hpp"

#include <gtest/gtest.h>

#include <filesystem>

namespace binform {
namespace {

TEST(ParseRational, Accepts) {
  EXPECT_EQ(parse_rational("3/4"), mpq_class(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), mpq_class(-3, 4));
  EXPECT_EQ(parse_rational("17"), 17);
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            mpq_class("123456789012345678901234567890"));
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1//2", "0x10"}) {
    EXPECT_THROW(parse_rational(bad), DomainError) << bad;
  }
}

TEST(FormDocument, RoundTrip) {
  for (std::uint64_t n = 1; n <= 20; ++n) {
    const auto f = fstar_coefficients(n);
    EXPECT_EQ(parse_form_document(form_document(f)), f);
  }
}

TEST(FormDocument, Validation) {
  EXPECT_THROW(parse_form_document("{"), DomainError);
  EXPECT_THROW(parse_form_document(R"({"degree": 3, "coefficients": ["1", "2"]})"), DomainError);
  EXPECT_THROW(parse_form_document(R"({"degree": 1, "coefficients": [1, 2]})"), DomainError);
  EXPECT_THROW(parse_form_document(R"({"coefficients": ["1", "2"]})"), DomainError);
  EXPECT_THROW(parse_form_document(R"({"degree": 1, "coefficients": ["0", "0"]})"), DomainError);
  EXPECT_EQ(parse_form_document(R"({"degree": 2, "coefficients": ["1", "0", "-1/2"]})"),
            BinaryForm({1, 0, mpq_class(-1, 2)}));
}

TEST(FormDocument, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "binform_form_io_test.json";
  const auto f = sn_coefficients(7);
  write_form_file(path, f);
  EXPECT_EQ(read_form_file(path), f);
  std::filesystem::remove(path);
  EXPECT_THROW(read_form_file(path), DomainError);
}

}  // namespace
}  // namespace binform
