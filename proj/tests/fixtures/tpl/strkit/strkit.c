/* strkit: string helpers for C programs. */
#include <ctype.h>
#include <stdlib.h>
#include <string.h>

char* sk_trim(char* s) {
  char* end;
  while (isspace((unsigned char)*s)) s++;
  if (*s == 0) return s;
  end = s + strlen(s) - 1;
  while (end > s && isspace((unsigned char)*end)) end--;
  end[1] = '\0';
  return s;
}

int sk_starts_with(const char* s, const char* prefix) {
  size_t n = strlen(prefix);
  if (strlen(s) < n) {
    return 0;
  }
  return strncmp(s, prefix, n) == 0;
}

int sk_ends_with(const char* s, const char* suffix) {
  size_t a = strlen(s), b = strlen(suffix);
  if (b > a) {
    return 0;
  }
  return memcmp(s + a - b, suffix, b) == 0;
}

char* sk_dup(const char* s) {
  size_t n = strlen(s) + 1;
  char* out = (char*)malloc(n);
  if (out != NULL) memcpy(out, s, n);
  return out;
}

void sk_lower(char* s) {
  for (; *s; ++s) {
    *s = (char)tolower((unsigned char)*s);
  }
}

size_t sk_count(const char* s, char c) {
  size_t n = 0;
  for (; *s; ++s) {
    if (*s == c) ++n;
  }
  return n;
}

char* sk_join(const char* a, const char* sep, const char* b) {
  size_t la = strlen(a), ls = strlen(sep), lb = strlen(b);
  char* out = (char*)malloc(la + ls + lb + 1);
  if (out == NULL) return NULL;
  memcpy(out, a, la);
  memcpy(out + la, sep, ls);
  memcpy(out + la + ls, b, lb + 1);
  return out;
}

int sk_replace_char(char* s, char from, char to) {
  int n = 0;
  for (; *s; ++s) {
    if (*s == from) {
      *s = to;
      ++n;
    }
  }
  return n;
}

size_t sk_split_count(const char* s, const char* delims) {
  size_t n = 0;
  int in_token = 0;
  for (; *s; ++s) {
    if (strchr(delims, *s) != NULL) {
      in_token = 0;
    } else if (!in_token) {
      in_token = 1;
      ++n;
    }
  }
  return n;
}

int sk_is_number(const char* s) {
  if (*s == '-' || *s == '+') s++;
  if (!isdigit((unsigned char)*s)) return 0;
  while (isdigit((unsigned char)*s)) s++;
  return *s == '\0';
}
