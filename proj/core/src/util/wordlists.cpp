#include "mantis/util/wordlists.hpp"

#include "mantis/util/io.hpp"

namespace mantis::util {

Wordlists Wordlists::load(const std::string& dir) {
  Wordlists w;
  w.brands = read_list_file(dir + "/brands.txt");
  w.dictionary = read_list_file(dir + "/words.txt");
  for (auto& t : read_list_file(dir + "/suspicious_tlds.txt")) w.suspicious_tlds.insert(t);
  for (auto& t : read_list_file(dir + "/valid_tlds.txt")) w.valid_tlds.insert(t);
  for (auto& t : read_list_file(dir + "/reputable_tlds.txt")) w.reputable_tlds.insert(t);
  for (auto& t : read_list_file(dir + "/webhosting.txt")) w.webhosting_apexes.insert(t);
  return w;
}

const Wordlists& Wordlists::bundled() {
  static Wordlists w = load(bundled_data_dir());
  return w;
}

}  // namespace mantis::util
